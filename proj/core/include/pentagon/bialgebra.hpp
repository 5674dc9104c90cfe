#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "pentagon/operator.hpp"
#include "pentagon/report.hpp"
#include "pentagon/scalar.hpp"

namespace pentagon {

using Tensor2 = std::map<std::array<std::size_t, 2>, Scalar>;
using Tensor3 = std::map<std::array<std::size_t, 3>, Scalar>;

/// Structure constants of a finite-dimensional bialgebra in a basis {e_a}:
///   e_a e_b = m[a,b,c] e_c,   Delta(e_a) = mu[a,b,c] e_b (x) e_c,
/// plus optional Hopf data: unit 1 = unit[a] e_a, counit eps(e_a) = counit[a],
/// antipode gamma(e_a) = antipode[a,b] e_b and its inverse.
struct StructureConstants {
  Field field = Field::Q;
  std::size_t dim = 0;
  Tensor3 m;
  Tensor3 mu;
  std::optional<std::vector<Scalar>> unit;
  std::optional<std::vector<Scalar>> counit;
  std::optional<Tensor2> antipode;
  std::optional<Tensor2> antipode_inv;

  Scalar mult(std::size_t a, std::size_t b, std::size_t c) const;
  Scalar comult(std::size_t a, std::size_t b, std::size_t c) const;
  Scalar gamma(std::size_t a, std::size_t b) const;
  Scalar gamma_inv(std::size_t a, std::size_t b) const;

  void set_mult(std::size_t a, std::size_t b, std::size_t c, const Scalar& v);
  void set_comult(std::size_t a, std::size_t b, std::size_t c, const Scalar& v);

  bool has_hopf_data() const { return antipode.has_value() && antipode_inv.has_value(); }

  /// Index bounds, value fields, antipode inverse law, unit and counit laws.
  /// Throws InvalidStructure naming the first violated invariant.
  void validate() const;
};

/// Matrices for e_b and e^b, indexed <row|X|col>:
///   <a|e_b|c> = m[a,b,c],   <a|e^b|c> = mu[a,b,c].
struct Representation {
  std::vector<Operator> lower;
  std::vector<Operator> upper;
};

VerificationReport check_associativity(const StructureConstants& sc);
VerificationReport check_coassociativity(const StructureConstants& sc);
/// Delta is an algebra morphism.
VerificationReport check_compatibility(const StructureConstants& sc);
VerificationReport check_unit_laws(const StructureConstants& sc);
VerificationReport check_counit_laws(const StructureConstants& sc);
VerificationReport check_antipode_inverse(const StructureConstants& sc);

Representation adjoint_rep(const StructureConstants& sc);

/// Heisenberg double relations as matrix identities in rep:
///   e_a e_b = m e_c,   e^a e^b = mu^{ab}_c e^c,
///   e_a e^b = m_{rc}^b mu_a^{cs} e^r e_s.
VerificationReport check_heisenberg_relations(const StructureConstants& sc, const Representation& rep);

/// S = sum_a rep(e_a) (x) rep(e^a) on two legs of dimension rep size.
Operator canonical_element(const Representation& rep);
inline Operator canonical_element(const StructureConstants& sc) { return canonical_element(adjoint_rep(sc)); }

/// Second ("tilde") double realized through the first with opposite
/// multiplication as transposition:
///   rep~(e~_a) = gamma_a^b rep(e_b)^t,   rep~(e~^a) = gammabar_b^a rep(e^b)^t.
Representation tilde_rep(const StructureConstants& sc, const Representation& rep);

/// Tilde double relations:
///   e~_a e~_b = m e~_c,   e~^a e~^b = mu^{ab}_c e~^c,
///   e~^b e~_a = mu_a^{sc} m_{cr}^b e~_s e~^r.
VerificationReport check_tilde_relations(const StructureConstants& sc, const Representation& tilde);

/// Multiplication table of a finite group: table[g][h] = index of gh.
using CayleyTable = std::vector<std::vector<std::size_t>>;

CayleyTable cyclic_group_table(std::size_t n);
/// Permutations of {0,1,2} in lexicographic order, (gh)(x) = g(h(x)).
CayleyTable symmetric3_table();

/// Group algebra with group-like coproduct, unit at the identity, counit 1,
/// antipode e_g -> e_{g^-1}. Throws InvalidStructure if the table is not a group.
StructureConstants group_algebra(const CayleyTable& table);

/// Dual bialgebra in the dual basis: multiplication and comultiplication swap
/// roles, unit and counit swap, antipode is transposed.
StructureConstants dual_bialgebra(const StructureConstants& sc);

}  // namespace pentagon
