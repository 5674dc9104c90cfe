#include "pentagon/scalar.hpp"

#include "pentagon/errors.hpp"

namespace pentagon {

std::string_view field_name(Field field) { return field == Field::Q ? "Q" : "Qq"; }

Field parse_field(std::string_view name) {
  if (name == "Q") return Field::Q;
  if (name == "Qq") return Field::Qq;
  throw ParseError("unknown field '" + std::string(name) + "' (expected \"Q\" or \"Qq\")", 0);
}

namespace {

[[noreturn]] void mismatch(Field a, Field b) {
  throw FieldMismatch("field mismatch: " + std::string(field_name(a)) + " vs " + std::string(field_name(b)));
}

}  // namespace

Scalar Scalar::zero(Field field) { return integer(field, 0); }
Scalar Scalar::one(Field field) { return integer(field, 1); }

Scalar Scalar::integer(Field field, long value) {
  if (field == Field::Q) return Scalar(Rational(value));
  return Scalar(RationalFunction(value));
}

Scalar Scalar::q() { return Scalar(RationalFunction::q()); }

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

bool Scalar::is_one() const {
  return std::visit([](const auto& v) { return v.is_one(); }, value_);
}

const Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw FieldMismatch("scalar is not in Q");
}

const RationalFunction& Scalar::function() const {
  if (const auto* r = std::get_if<RationalFunction>(&value_)) return *r;
  throw FieldMismatch("scalar is not in Q(q)");
}

Scalar Scalar::promoted() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return Scalar(RationalFunction(*r));
  return *this;
}

Scalar Scalar::evaluate(const Rational& point) const {
  if (const auto* f = std::get_if<RationalFunction>(&value_)) return Scalar(f->evaluate(point));
  return *this;
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(-v); }, value_);
}

#define PENTAGON_SCALAR_OP(OP)                                                  \
  Scalar& Scalar::operator OP(const Scalar& o) {                                \
    if (value_.index() != o.value_.index()) mismatch(field(), o.field());       \
    if (auto* r = std::get_if<Rational>(&value_)) {                             \
      *r OP std::get<Rational>(o.value_);                                       \
    } else {                                                                    \
      std::get<RationalFunction>(value_) OP std::get<RationalFunction>(o.value_); \
    }                                                                           \
    return *this;                                                               \
  }

PENTAGON_SCALAR_OP(+=)
PENTAGON_SCALAR_OP(-=)
PENTAGON_SCALAR_OP(*=)
PENTAGON_SCALAR_OP(/=)

#undef PENTAGON_SCALAR_OP

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = one(field());
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& v) { return v.to_string(); }, value_);
}

}  // namespace pentagon
