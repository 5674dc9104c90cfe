#include "pentagon/rational.hpp"

#include "pentagon/errors.hpp"

namespace pentagon {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw ParseError("invalid rational '" + text + "'", 0);
  if (v.get_den() == 0) throw DivisionByZero();
  v.canonicalize();
  return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

std::string Rational::to_string() const { return value_.get_str(10); }

}  // namespace pentagon
