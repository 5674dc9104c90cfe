#include "pentagon/drinfeld.hpp"

#include "pentagon/errors.hpp"
#include "pentagon/linalg.hpp"

namespace pentagon {

SMatrixFamily s_family(const Operator& s) {
  if (s.legs() != 2 || !s.square_legs() || s.row_dims()[0] != s.row_dims()[1]) {
    throw DimensionMismatch("s_family: S must act on two equal square legs");
  }
  SMatrixFamily fam;
  fam.s = s;
  fam.s_tilde = s.transpose();
  fam.s_prime = invert(s, "S").partial_transpose(0);
  try {
    fam.s_double_prime = invert(s.partial_transpose(1), "S^{t2}");
  } catch (const SingularMatrix& e) {
    throw CrossInvertibilityError(std::string("S is not cross-invertible: ") + e.what());
  }
  return fam;
}

CanonicalFamily s_primes_from_reps(const StructureConstants& sc, const Representation& rep,
                                   const Representation& tilde) {
  if (!sc.has_hopf_data()) throw MissingHopfData("s_primes_from_reps needs antipode data");
  CanonicalFamily out;
  out.s = canonical_element(rep);
  out.s_tilde = canonical_element(Representation{tilde.lower, tilde.upper});
  out.s_prime = canonical_element(Representation{tilde.lower, rep.upper});
  out.s_double_prime = canonical_element(Representation{rep.lower, tilde.upper});

  const SMatrixFamily fam = s_family(out.s);
  out.agreement.push_back(check_equal(out.s_tilde, fam.s_tilde, "S~ = S^t"));
  out.agreement.push_back(check_equal(out.s_prime, fam.s_prime, "S' = (S^-1)^{t1}"));
  out.agreement.push_back(check_equal(out.s_double_prime, fam.s_double_prime, "S'' = (S^{t2})^-1"));
  return out;
}

DoubleGenerators drinfeld_generators(const StructureConstants& sc, const Representation& rep,
                                     const Representation& tilde) {
  if (!sc.has_hopf_data()) throw MissingHopfData("drinfeld_generators needs antipode data");
  const std::size_t n = sc.dim;
  DoubleGenerators out;
  const std::vector<std::size_t> dims{n, n};
  out.e.assign(n, Operator(sc.field, dims, dims));
  out.e_dual.assign(n, Operator(sc.field, dims, dims));
  for (const auto& [k, v] : sc.mu) {
    // mu_a^{bc}: a = k[0], b = k[1], c = k[2]
    out.e[k[0]] = out.e[k[0]] + Operator::kron(rep.lower[k[1]], tilde.lower[k[2]]).scaled(v);
  }
  for (const auto& [k, v] : sc.m) {
    // m_{cb}^a: c = k[0], b = k[1], a = k[2]
    out.e_dual[k[2]] = out.e_dual[k[2]] + Operator::kron(rep.upper[k[1]], tilde.upper[k[0]]).scaled(v);
  }
  return out;
}

RMatrix r_matrix(const SMatrixFamily& family) {
  const std::size_t d = family.s.row_dims()[0];
  const std::vector<std::size_t> dims{d, d, d, d};
  const Operator a = place_on_legs(family.s_double_prime, {4, {0, 3}, dims});
  const Operator b = place_on_legs(family.s, {4, {0, 2}, dims});
  const Operator c = place_on_legs(family.s_tilde, {4, {1, 3}, dims});
  const Operator e = place_on_legs(family.s_prime, {4, {1, 2}, dims});
  return RMatrix{a * (b * (c * e)), 2};
}

RMatrix canonical_r_matrix(const DoubleGenerators& generators) {
  if (generators.e.empty()) throw DimensionMismatch("canonical_r_matrix: no generators");
  Operator r = Operator::kron(generators.e[0], generators.e_dual[0]);
  for (std::size_t a = 1; a < generators.e.size(); ++a) r = r + Operator::kron(generators.e[a], generators.e_dual[a]);
  return RMatrix{std::move(r), 2};
}

VerificationReport check_yang_baxter(const RMatrix& r, const EvalOptions& options) {
  return check_yang_baxter(r.op, r.legs_per_site, options);
}

std::vector<VerificationReport> check_double_consistency(const StructureConstants& sc, const EvalOptions& options) {
  if (!sc.has_hopf_data()) throw MissingHopfData("check_double_consistency needs antipode data");
  if (!check_antipode_inverse(sc).holds) throw InvalidStructure("antipode_inv is not the inverse of antipode");
  const Representation rep = adjoint_rep(sc);
  const Representation tilde = tilde_rep(sc, rep);
  std::vector<VerificationReport> out;
  out.push_back(check_tilde_relations(sc, tilde));
  CanonicalFamily fam = s_primes_from_reps(sc, rep, tilde);
  for (auto& r : fam.agreement) out.push_back(std::move(r));
  out.push_back(check_reversed_pentagon(fam.s_tilde, options));
  for (auto& r : check_mixed_pentagons(fam.s, fam.s_prime, fam.s_double_prime, fam.s_tilde, options)) {
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pentagon
