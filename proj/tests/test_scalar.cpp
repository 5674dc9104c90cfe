#include <gtest/gtest.h>

#include <random>

#include "pentagon/errors.hpp"
#include "pentagon/scalar.hpp"

using namespace pentagon;

namespace {

Scalar qq(const char* text) { return Scalar::parse(text, Field::Qq); }
Scalar rat(const char* text) { return Scalar::parse(text, Field::Q); }

}  // namespace

TEST(Rational, LowestTerms) {
  const Rational r(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0).denominator(), 1);
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), DivisionByZero);
}

TEST(Scalar, RationalArithmetic) {
  EXPECT_EQ(rat("2/3") + rat("1/6"), rat("5/6"));
  EXPECT_EQ((rat("2/3") + rat("1/6")).to_string(), "5/6");
  EXPECT_EQ(rat("-3/4").to_string(), "-3/4");
  EXPECT_THROW(rat("1") / rat("0"), DivisionByZero);
}

TEST(Scalar, PolynomialProduct) {
  EXPECT_EQ(qq("1-q") * qq("1+q"), qq("1-q^2"));
  EXPECT_EQ((qq("1-q") * qq("1+q")).to_string(), "1-q^2");
}

TEST(Scalar, GcdReduction) {
  const Scalar r = qq("1-q^2") / qq("1-q");
  EXPECT_EQ(r.to_string(), "1+q");
  const RationalFunction& f = r.function();
  EXPECT_TRUE(f.denominator().is_one());
  EXPECT_EQ(qq("(1-q)/(1-q^2)").to_string(), "1/(1+q)");
}

TEST(Scalar, CanonicalDenominatorSign) {
  const Scalar s = qq("1/(-1-q)");
  EXPECT_GT(s.function().denominator().leading(), 0);
  EXPECT_EQ(s, qq("-1/(1+q)"));
}

TEST(Scalar, ParseForms) {
  EXPECT_TRUE(qq("q^0").is_one());
  EXPECT_EQ(qq("2q"), qq("2*q"));
  EXPECT_EQ(qq("(1+q)(1-q)"), qq("1-q^2"));
  EXPECT_EQ(qq("-q+1"), qq("1-q"));
  EXPECT_EQ(rat("+7"), Scalar::integer(Field::Q, 7));
}

TEST(Scalar, ParseErrors) {
  EXPECT_THROW(rat("q"), ParseError);
  EXPECT_THROW(qq("1+"), ParseError);
  EXPECT_THROW(qq("(1-q"), ParseError);
  EXPECT_THROW(qq("1/(1-1)"), ParseError);
  EXPECT_THROW(rat("\xe2\x88\x92" "3"), ParseError);  // unicode minus
  try {
    qq("1+*q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Scalar, FieldMismatch) {
  EXPECT_THROW(rat("1") + qq("q"), FieldMismatch);
  EXPECT_EQ(rat("1/2").promoted() + qq("q"), qq("(1+2q)/2"));
}

TEST(Scalar, Evaluate) {
  const Rational half(mpz_class(1), mpz_class(2));
  EXPECT_EQ(qq("q/((1-q)(1-q^2))").evaluate(half), rat("4/3"));
  EXPECT_THROW(qq("1/(1-2q)").evaluate(half), DivisionByZero);
}

TEST(Scalar, FormatParseRoundTrip) {
  for (const char* text : {"0", "1", "-1", "q", "1-q+3*q^2", "(1+q)/(1-q)", "1/(1+q)", "-2*q^3/(1+q^2)", "q/(3+q)"}) {
    const Scalar s = qq(text);
    EXPECT_EQ(qq(s.to_string().c_str()), s) << text;
    EXPECT_EQ(qq(s.to_string().c_str()).to_string(), s.to_string()) << text;
  }
}

namespace {

Scalar random_function(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), deg(0, 3);
  auto poly = [&] {
    std::vector<mpz_class> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    return Polynomial(c);
  };
  Polynomial den = poly();
  while (den.is_zero()) den = poly();
  return Scalar(RationalFunction(poly(), den));
}

}  // namespace

TEST(Scalar, FieldAxiomsRandomized) {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    const Scalar a = random_function(rng), b = random_function(rng), c = random_function(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(Scalar::parse(a.to_string(), Field::Qq), a);
  }
}

TEST(Scalar, EvaluationHomomorphismRandomized) {
  std::mt19937 rng(11);
  const Rational point(mpz_class(2), mpz_class(7));
  for (int i = 0; i < 60; ++i) {
    const Scalar f = random_function(rng), g = random_function(rng);
    try {
      EXPECT_EQ((f * g).evaluate(point), f.evaluate(point) * g.evaluate(point));
      EXPECT_EQ((f + g).evaluate(point), f.evaluate(point) + g.evaluate(point));
    } catch (const DivisionByZero&) {
      // point hit a pole of f or g
    }
  }
}
