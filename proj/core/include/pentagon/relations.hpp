#pragma once

#include <cstddef>
#include <vector>

#include "pentagon/bialgebra.hpp"
#include "pentagon/operator.hpp"
#include "pentagon/report.hpp"

namespace pentagon {

enum class Strategy {
  /// Apply both sides to every basis vector with sparse intermediates.
  BasisVectors,
  /// Materialize both products; only for spaces of dimension <= kFullProductLimit.
  FullProduct,
};

inline constexpr std::size_t kFullProductLimit = 256;

struct EvalOptions {
  Strategy strategy = Strategy::BasisVectors;
  /// Worker threads for basis-vector evaluation; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// An operator together with the legs it acts on.
struct Factor {
  const Operator* op;
  std::vector<std::size_t> legs;
};

/// A product identity lhs = rhs on a multi-leg space. Each side is written in
/// reading order, so the rightmost factor acts first.
struct OperatorIdentity {
  RelationId id;
  std::vector<std::size_t> leg_dims;
  std::vector<Factor> lhs;
  std::vector<Factor> rhs;
};

/// Exact check; on failure the witness is the lexicographically first basis
/// vector whose images differ. The result does not depend on `threads`.
VerificationReport check_identity(const OperatorIdentity& identity, const EvalOptions& options = {});

/// S12 S13 S23 = S23 S12
VerificationReport check_pentagon(const Operator& s, const EvalOptions& options = {});
/// S~12 S~23 = S~23 S~13 S~12
VerificationReport check_reversed_pentagon(const Operator& s_tilde, const EvalOptions& options = {});

/// The six mixed identities, in order:
///   S'12 S'13 S23 = S23 S'12          S~12 S'23 = S'23 S'13 S~12
///   S12 S''13 S''23 = S''23 S12       S''12 S~23 = S~23 S''13 S''12
///   S'12 S~13 S''23 = S''23 S'12      S''12 S'23 = S'23 S13 S''12
std::vector<VerificationReport> check_mixed_pentagons(const Operator& s, const Operator& s_prime,
                                                      const Operator& s_double_prime, const Operator& s_tilde,
                                                      const EvalOptions& options = {});

/// R12 R13 R23 = R23 R13 R12 where each "site" is `legs_per_site` legs of R
/// (1 for a plain R, 2 for R on pair-legs). 0 means half of R's legs.
VerificationReport check_yang_baxter(const Operator& r, std::size_t legs_per_site = 0,
                                     const EvalOptions& options = {});

/// G1 S12 F2 = F2 G1 with F2 = S02, G1 = S10 on legs (0,1,2), leg 0 being the
/// representation space.
VerificationReport check_mixed_permutation(const Operator& s, const EvalOptions& options = {});

/// F1 F2 S12 = S12 F1 with F_i = S0i, and S12 G1 G2 = G2 S12 with G_i = Si0.
VerificationReport check_fg_relations(const Operator& s, const EvalOptions& options = {});

/// Drinfeld double relations for generator matrices E_a (e) and E^a (e_dual):
///   E_a E_b = m_{ab}^c E_c,   E^a E^b = mu_c^{ab} E^c,
///   mu_a^{sc} m_{cr}^b E_s E^r = m_{rc}^b mu_a^{cs} E^r E_s.
VerificationReport check_drinfeld_relations(const StructureConstants& sc, const std::vector<Operator>& e,
                                            const std::vector<Operator>& e_dual);

/// Exact operator equality reported as a relation (witness: first differing column).
VerificationReport check_equal(const Operator& lhs, const Operator& rhs, std::string label = {});

}  // namespace pentagon
