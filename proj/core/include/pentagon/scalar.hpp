#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "pentagon/polynomial.hpp"
#include "pentagon/rational.hpp"

namespace pentagon {

/// Coefficient field carried uniformly by every operator and series.
enum class Field { Q, Qq };

std::string_view field_name(Field field);
/// Accepts "Q" and "Qq".
Field parse_field(std::string_view name);

/// A member of Q or Q(q). Arithmetic across fields throws FieldMismatch;
/// Q embeds into Q(q) only through promoted().
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational value) : value_(std::move(value)) {}                    // NOLINT
  Scalar(RationalFunction value) : value_(std::move(value)) {}            // NOLINT

  static Scalar zero(Field field);
  static Scalar one(Field field);
  static Scalar integer(Field field, long value);
  /// The formal variable of Q(q).
  static Scalar q();

  /// Parses the scalar grammar documented in the README.
  static Scalar parse(std::string_view text, Field field);

  Field field() const noexcept { return value_.index() == 0 ? Field::Q : Field::Qq; }
  bool is_zero() const;
  bool is_one() const;

  const Rational& rational() const;
  const RationalFunction& function() const;

  Scalar promoted() const;
  /// Substitutes q = point. Q scalars are returned unchanged.
  Scalar evaluate(const Rational& point) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

  Scalar pow(unsigned exponent) const;

  /// Canonical text; parse(to_string()) reproduces the value.
  std::string to_string() const;

 private:
  std::variant<Rational, RationalFunction> value_;
};

}  // namespace pentagon
