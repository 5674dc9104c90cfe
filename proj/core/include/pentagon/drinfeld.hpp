#pragma once

#include <vector>

#include "pentagon/bialgebra.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/operator.hpp"
#include "pentagon/relations.hpp"
#include "pentagon/report.hpp"

namespace pentagon {

/// S together with S~ = S^t, S' = (S^-1)^{t1}, S'' = (S^{t2})^-1.
struct SMatrixFamily {
  Operator s;
  Operator s_tilde;
  Operator s_prime;
  Operator s_double_prime;
};

/// Raised when S^{t2} is singular (S is not cross-invertible).
class CrossInvertibilityError : public Error {
 public:
  using Error::Error;
};

/// Throws SingularMatrix if S is singular and CrossInvertibilityError if S^{t2} is.
SMatrixFamily s_family(const Operator& s);

/// S' = sum rep~(e~_a) (x) rep(e^a), S'' = sum rep(e_a) (x) rep~(e~^a),
/// S~ = sum rep~(e~_a) (x) rep~(e~^a), with their agreement against the
/// transpose formulas recorded in `agreement`.
struct CanonicalFamily {
  Operator s;
  Operator s_tilde;
  Operator s_prime;
  Operator s_double_prime;
  std::vector<VerificationReport> agreement;
};

CanonicalFamily s_primes_from_reps(const StructureConstants& sc, const Representation& rep,
                                   const Representation& tilde);

/// Drinfeld double generators on the pair space (leg of rep, leg of rep~):
///   E_a = mu_a^{bc} rep(e_b) (x) rep~(e~_c),   E^a = m_{cb}^a rep(e^b) (x) rep~(e~^c).
struct DoubleGenerators {
  std::vector<Operator> e;
  std::vector<Operator> e_dual;
};

DoubleGenerators drinfeld_generators(const StructureConstants& sc, const Representation& rep,
                                     const Representation& tilde);

/// R on four legs (1, 1~, 2, 2~) grouped as two pair-legs: legs_per_site = 2.
struct RMatrix {
  Operator op;
  std::size_t legs_per_site = 2;
};

/// R_{12,34} = S''_{14} S_{13} S~_{24} S'_{23}.
RMatrix r_matrix(const SMatrixFamily& family);

/// sum_a E_a (x) E^a.
RMatrix canonical_r_matrix(const DoubleGenerators& generators);

VerificationReport check_yang_baxter(const RMatrix& r, const EvalOptions& options = {});

/// Tilde-double relations, reversed pentagon for S~, the six mixed pentagons,
/// and agreement of the representation-built S~, S', S'' with the transpose
/// formulas. Throws InvalidStructure if the antipode data are inconsistent.
std::vector<VerificationReport> check_double_consistency(const StructureConstants& sc,
                                                         const EvalOptions& options = {});

}  // namespace pentagon
