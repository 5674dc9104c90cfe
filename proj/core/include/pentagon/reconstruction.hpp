#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pentagon/bialgebra.hpp"
#include "pentagon/operator.hpp"
#include "pentagon/report.hpp"

namespace pentagon {

/// Rank of (P12 S12)^{t1}, evaluated literally. Cross-checked against the rank
/// of the reshuffled matrix; a disagreement is an internal error.
std::size_t dimension(const Operator& s);

/// Rank of (P12 S12)^{t1} with no cross-check.
std::size_t literal_dimension(const Operator& s);

/// Expansion S[(i1,i2),(j1,j2)] = sum_a G_a[i1,j1] F^a[i2,j2] from a rank
/// factorization of the reshuffled S. Deterministic under the pivot rule.
struct Factorization {
  std::vector<Operator> g;
  std::vector<Operator> f;
};

Factorization factorize(const Operator& s);

/// Matrices X_a with tr(X_a F^b) = delta_a^b. The minimum-support solution of
/// the (generally underdetermined) linear system is returned.
std::vector<Operator> dual_matrices(const std::vector<Operator>& f);

/// m_{ab}^c = tr(G_a G_b G^c) and mu_c^{ab} = tr(F^a F^b F_c). Throws
/// ClosureViolation unless every G_a G_b lies in span{G_c} and every
/// F^a F^b in span{F^c}, which makes the result independent of the duals.
StructureConstants structure_constants(const std::vector<Operator>& g, const std::vector<Operator>& g_dual,
                                       const std::vector<Operator>& f, const std::vector<Operator>& f_dual);

struct ReconstructionResult {
  std::size_t dim = 0;
  std::vector<Operator> g;
  std::vector<Operator> f;
  std::vector<Operator> g_dual;
  std::vector<Operator> f_dual;
  StructureConstants constants;
  std::vector<VerificationReport> diagnostics;
  /// Best-effort searches; absent when no unit (counit) exists.
  std::optional<std::vector<Scalar>> unit;
  std::optional<std::vector<Scalar>> counit;
};

/// Solves eps^a m_{ab}^c = delta_b^c = m_{ba}^c eps^a.
std::optional<std::vector<Scalar>> find_unit(const StructureConstants& sc);
/// Solves sum_b mu_a^{bc} eps_b = delta_a^c = sum_c mu_a^{bc} eps_c.
std::optional<std::vector<Scalar>> find_counit(const StructureConstants& sc);

/// Axioms of both reconstructed algebras, trace duality, the pairing
/// sum_a G_a (x) F^a = S, and the pentagon for the canonical element rebuilt
/// from the reconstructed constants.
std::vector<VerificationReport> validate(const ReconstructionResult& result, const Operator& s);

/// Full pipeline: factorize, duals, constants, validation, unit/counit search.
/// Rejects S = 0 and operators that are not on two equal square legs.
ReconstructionResult reconstruct(const Operator& s);

}  // namespace pentagon
