#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "pentagon/rational.hpp"

namespace pentagon {

/// Dense univariate polynomial in q with integer coefficients, lowest degree first.
/// The zero polynomial has no stored coefficients; the top coefficient is never zero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<mpz_class> coefficients);

  /// q^k
  static Polynomial monomial(unsigned degree, const mpz_class& coefficient = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const;
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  mpz_class coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }
  const mpz_class& leading() const { return coeffs_.back(); }

  /// gcd of all coefficients (non-negative; 0 for the zero polynomial).
  mpz_class content() const;
  Polynomial primitive_part() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const mpz_class& factor) const;
  /// Exact division of every coefficient; the divisor must divide the content.
  Polynomial divided_exactly(const mpz_class& divisor) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Rational evaluate(const Rational& point) const;

  /// Plain ascending-degree form, e.g. "1-q+3*q^2".
  std::string to_string() const;
  std::size_t term_count() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Exact quotient of a by b in Z[q]; b must divide a over Z[q].
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Primitive gcd over Z[q] with positive leading coefficient (gcd(0,0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Element of Q(q) stored as a reduced quotient of integer polynomials.
///
/// Canonical form: numerator and denominator are coprime in Q[q], their
/// coefficients share no common integer factor, and the denominator has a
/// positive leading coefficient. Zero is 0/1. Equality is structural.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long constant) : num_(constant), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(const Rational& constant);
  explicit RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(1) {}
  RationalFunction(Polynomial numerator, Polynomial denominator);

  /// The formal variable q.
  static RationalFunction q();

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Substitute an exact rational for q; throws DivisionByZero at a pole.
  Rational evaluate(const Rational& point) const;

  std::string to_string() const;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace pentagon
