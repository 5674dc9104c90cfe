#include "pentagon/polynomial.hpp"

#include <utility>

#include "pentagon/errors.hpp"

namespace pentagon {

Polynomial::Polynomial(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

Polynomial::Polynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(unsigned degree, const mpz_class& coefficient) {
  std::vector<mpz_class> c(degree + 1, mpz_class(0));
  c[degree] = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Polynomial::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class c = content();
  if (leading() < 0) c = -c;
  return divided_exactly(c);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const mpz_class& factor) const {
  if (factor == 0) return {};
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c *= factor;
  return r;
}

Polynomial Polynomial::divided_exactly(const mpz_class& divisor) const {
  if (divisor == 0) throw DivisionByZero();
  Polynomial r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
  return r;
}

Rational Polynomial::evaluate(const Rational& point) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * point + Rational(*it, 1);
  }
  return acc;
}

std::size_t Polynomial::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += (c != 0);
  return n;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'q';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[q].
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
  const long db = b.degree();
  const mpz_class& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const long shift = a.degree() - db;
    const mpz_class la = a.leading();
    a = a.scaled(lb) - Polynomial::monomial(static_cast<unsigned>(shift), la) * b;
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.primitive_part();
  Polynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error("exact_quotient: divisor does not divide");
  std::vector<mpz_class> rem = a.coefficients();
  std::vector<mpz_class> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), mpz_class(0));
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) {
      throw Error("exact_quotient: divisor does not divide");
    }
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    quo[k] = f;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[k + j].get_mpz_t(), f.get_mpz_t(), bc[j].get_mpz_t());
  }
  for (const auto& r : rem) {
    if (r != 0) throw Error("exact_quotient: divisor does not divide");
  }
  return Polynomial(std::move(quo));
}

RationalFunction::RationalFunction(const Rational& constant)
    : num_(std::vector<mpz_class>{constant.numerator()}), den_(std::vector<mpz_class>{constant.denominator()}) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

RationalFunction RationalFunction::q() { return RationalFunction(Polynomial::monomial(1)); }

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  mpz_class c;
  mpz_class cn = num_.content();
  mpz_class cd = den_.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divided_exactly(c);
    den_ = den_.divided_exactly(c);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (is_zero()) return *this;
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

Rational RationalFunction::evaluate(const Rational& point) const {
  const Rational d = den_.evaluate(point);
  if (d.is_zero()) throw DivisionByZero();
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
  const std::string n = num_.to_string();
  if (den_.is_one()) return n;
  const std::string d = den_.to_string();
  const bool wrap_n = num_.term_count() > 1;
  const bool wrap_d = den_.degree() > 0;
  std::string out = wrap_n ? "(" + n + ")" : n;
  out += '/';
  out += wrap_d ? "(" + d + ")" : d;
  return out;
}

}  // namespace pentagon
