#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "pentagon/rational.hpp"
#include "pentagon/report.hpp"
#include "pentagon/scalar.hpp"

namespace pentagon {

/// Exponents (a, b, c) of the normal-ordered monomial V^a W^b U^c.
using Monomial = std::array<unsigned, 3>;

inline unsigned total_degree(const Monomial& m) { return m[0] + 2 * m[1] + m[2]; }
std::string monomial_label(const Monomial& m);

/// Sum of c_{abc} V^a W^b U^c with nonzero coefficients.
class NormalOrderedElement {
 public:
  explicit NormalOrderedElement(Field field = Field::Qq) : field_(field) {}

  static NormalOrderedElement constant(const Scalar& value);
  static NormalOrderedElement monomial(Field field, const Monomial& m, const Scalar& coeff);
  static NormalOrderedElement v(Field field) { return monomial(field, {1, 0, 0}, Scalar::one(field)); }
  static NormalOrderedElement w(Field field) { return monomial(field, {0, 1, 0}, Scalar::one(field)); }
  static NormalOrderedElement u(Field field) { return monomial(field, {0, 0, 1}, Scalar::one(field)); }

  Field field() const noexcept { return field_; }
  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;
  /// Smallest total degree of a term; nullopt for zero.
  std::optional<unsigned> min_degree() const;

  void add_term(const Monomial& m, const Scalar& coeff);
  NormalOrderedElement& operator+=(const NormalOrderedElement& o);
  NormalOrderedElement& operator-=(const NormalOrderedElement& o);
  friend NormalOrderedElement operator+(NormalOrderedElement a, const NormalOrderedElement& b) { return a += b; }
  friend NormalOrderedElement operator-(NormalOrderedElement a, const NormalOrderedElement& b) { return a -= b; }
  NormalOrderedElement scaled(const Scalar& s) const;
  NormalOrderedElement truncated(unsigned max_degree) const;
  /// Keeps only terms without W (the quotient W = 0).
  NormalOrderedElement without_w() const;
  /// Substitutes q = point in every coefficient.
  NormalOrderedElement evaluate(const Rational& point) const;

  friend bool operator==(const NormalOrderedElement& a, const NormalOrderedElement& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::map<Monomial, Scalar> terms_;
};

/// UV -> vu * VU + w * W + extra, W central. The standard rule is vu = q, w = 1.
struct RewriteRule {
  /// The value of q: the formal variable, or a rational q0.
  Scalar q;
  Scalar vu;
  Scalar w;
  NormalOrderedElement extra;

  /// Over Q(q), or over Q at q = q0 when q0 is given.
  static RewriteRule standard(const std::optional<Rational>& q0 = std::nullopt);
  Field field() const { return vu.field(); }
  bool degree_preserving() const;
};

/// Normal-ordered multiplication truncated at total degree D.
class FormalAlgebra {
 public:
  FormalAlgebra(RewriteRule rule, unsigned max_degree);
  ~FormalAlgebra();
  FormalAlgebra(FormalAlgebra&&) noexcept;
  FormalAlgebra& operator=(FormalAlgebra&&) noexcept;

  const RewriteRule& rule() const noexcept { return rule_; }
  Field field() const { return rule_.field(); }
  unsigned max_degree() const noexcept { return max_degree_; }
  const Scalar& q() const noexcept { return rule_.q; }

  NormalOrderedElement multiply(const NormalOrderedElement& a, const NormalOrderedElement& b);
  NormalOrderedElement power(const NormalOrderedElement& x, unsigned n);

 private:
  const NormalOrderedElement& u_power_times_v_power(unsigned c, unsigned a);
  NormalOrderedElement monomial_product(const Monomial& x, const Monomial& y);

  RewriteRule rule_;
  unsigned max_degree_;
  struct Cache;
  std::unique_ptr<Cache> cache_;
};

/// (q)_n = (1-q)(1-q^2)...(1-q^n) over Q(q).
Scalar q_factorial(unsigned n);
/// (q)_n with q replaced by `q`.
Scalar q_factorial(unsigned n, const Scalar& q);
/// [a]_q = 1 + q + ... + q^{a-1}.
Scalar q_integer(unsigned a, const Scalar& q);

/// Euler series sum (-1)^n q^{n(n-1)/2} x^n / (q)_n truncated at the algebra's degree.
/// Throws InvalidStructure if x has a degree-0 term.
NormalOrderedElement pochhammer_series(FormalAlgebra& algebra, const NormalOrderedElement& x);

struct DilogSides {
  NormalOrderedElement lhs;
  NormalOrderedElement rhs;
};

/// E(U) E(M) E(V) and E(V) E(U) with M = (UV - VU)/(1-q).
DilogSides dilog_sides(unsigned max_degree, bool set_w_zero, const std::optional<Rational>& q0 = std::nullopt);

/// Throws InvalidStructure for D < 2 or q0 in {1, -1}.
VerificationReport verify_dilog_identity(unsigned max_degree, bool set_w_zero,
                                         const std::optional<Rational>& q0 = std::nullopt);

/// With W_alg = UV - q VU under `rule`: [U, W_alg] = 0 and [V, W_alg] = 0 up to degree D.
VerificationReport center_check(unsigned max_degree, const RewriteRule& rule = RewriteRule::standard());

}  // namespace pentagon
