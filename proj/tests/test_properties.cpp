#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pentagon/catalog.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/formal_algebra.hpp"
#include "pentagon/linalg.hpp"
#include "pentagon/reconstruction.hpp"
#include "pentagon/relations.hpp"

using namespace pentagon;

namespace {

Scalar small_int(std::mt19937& rng, int lo = -3, int hi = 3) {
  return Scalar::integer(Field::Q, std::uniform_int_distribution<int>(lo, hi)(rng));
}

Operator random_sparse(std::mt19937& rng, std::vector<std::size_t> dims, double density) {
  Operator op(Field::Q, dims, dims);
  std::bernoulli_distribution keep(density);
  for (std::size_t r = 0; r < op.rows(); ++r)
    for (std::size_t c = 0; c < op.cols(); ++c)
      if (keep(rng)) op.accumulate(r, c, small_int(rng));
  return op;
}

Matrix random_low_rank(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  Matrix a(Field::Q, rows, r), b(Field::Q, r, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < r; ++k) a(i, k) = small_int(rng);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < cols; ++j) b(k, j) = small_int(rng);
  return a * b;
}

NormalOrderedElement random_element(std::mt19937& rng, Field field, unsigned max_degree) {
  NormalOrderedElement out(field);
  std::uniform_int_distribution<unsigned> exp(0, 3);
  for (int i = 0; i < 4; ++i) {
    const Monomial m{exp(rng), exp(rng) % 2, exp(rng)};
    if (total_degree(m) > max_degree) continue;
    Scalar c = small_int(rng);
    if (field == Field::Qq) c = c.promoted() * Scalar::q().pow(exp(rng) % 2);
    out.add_term(m, c);
  }
  return out;
}

}  // namespace

TEST(Property, RankFactorizationRoundTrip) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 30; ++t) {
    const std::size_t rows = 2 + rng() % 6, cols = 2 + rng() % 6, r = rng() % 4;
    const Matrix m = random_low_rank(rng, rows, cols, r);
    const RankFactorization f = rank_factorize(m);
    EXPECT_EQ(f.left * f.right, m);
    EXPECT_LE(f.rank, r);
    oracle::Dense d = oracle::zeros(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) d[i][j] = m(i, j).rational().raw();
    EXPECT_EQ(f.rank, oracle::rank(d));
  }
}

TEST(Property, LiteralAndReshuffledRanksAgree) {
  std::mt19937 rng(99);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + rng() % 2;
    const std::size_t r = 1 + rng() % 3;
    Operator s(Field::Q, {d, d}, {d, d});
    for (std::size_t k = 0; k < r; ++k) {
      s = s + Operator::kron(random_sparse(rng, {d}, 0.6), random_sparse(rng, {d}, 0.6));
    }
    EXPECT_EQ(literal_dimension(s), rank(Matrix::from_operator(reshuffle(s, reconstruction_grouping()))));
  }
}

TEST(Property, DisjointPlacementsCommute) {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Operator a = random_sparse(rng, {2, 2}, 0.4);
    const Operator b = random_sparse(rng, {2}, 0.7);
    const std::vector<std::size_t> dims{2, 2, 2};
    const Operator pa = place_on_legs(a, {3, {2, 0}, dims});
    const Operator pb = place_on_legs(b, {3, {1}, dims});
    EXPECT_EQ(pa * pb, pb * pa);
  }
}

TEST(Property, PlacementIsMultiplicative) {
  std::mt19937 rng(6);
  for (int t = 0; t < 10; ++t) {
    const Operator a = random_sparse(rng, {2, 2}, 0.5);
    const Operator b = random_sparse(rng, {2, 2}, 0.5);
    const LegPlacement p{3, {1, 0}, {2, 2, 2}};
    EXPECT_EQ(place_on_legs(a, p) * place_on_legs(b, p), place_on_legs(a * b, p));
  }
}

TEST(Property, InverseTimesOperatorIsIdentity) {
  std::mt19937 rng(8);
  int inverted = 0;
  for (int t = 0; t < 20; ++t) {
    const Operator a = random_sparse(rng, {2, 2}, 0.6);
    try {
      EXPECT_EQ(invert(a) * a, Operator::identity(Field::Q, {2, 2}));
      ++inverted;
    } catch (const SingularMatrix&) {
    }
  }
  EXPECT_GT(inverted, 5);
}

TEST(Property, MultiplyAssociativeAtTruncation) {
  std::mt19937 rng(13);
  for (Field field : {Field::Q, Field::Qq}) {
    const std::optional<Rational> q0 =
        field == Field::Q ? std::optional<Rational>(Rational(mpz_class(2), mpz_class(3))) : std::nullopt;
    FormalAlgebra alg(RewriteRule::standard(q0), 7);
    for (int t = 0; t < 15; ++t) {
      const auto a = random_element(rng, field, 7);
      const auto b = random_element(rng, field, 7);
      const auto c = random_element(rng, field, 7);
      EXPECT_EQ(alg.multiply(alg.multiply(a, b), c), alg.multiply(a, alg.multiply(b, c)));
    }
  }
}

TEST(Property, PochhammerFunctionalEquation) {
  // E(x) = (1 - x) E(q x) for central x = W
  FormalAlgebra alg(RewriteRule::standard(), 16);
  const auto w = NormalOrderedElement::w(Field::Qq);
  const auto one = NormalOrderedElement::constant(Scalar::one(Field::Qq));
  const auto lhs = pochhammer_series(alg, w);
  const auto rhs = alg.multiply(one - w, pochhammer_series(alg, w.scaled(Scalar::q())));
  EXPECT_EQ(lhs, rhs);
}

TEST(Property, ScalingBreaksPentagon) {
  for (const char* name : {"zn:2", "zn:3", "s3"}) {
    const Operator s = canonical_element(example_constants(name));
    for (long c : {-1L, 2L, 3L}) {
      EXPECT_FALSE(check_pentagon(s.scaled(Scalar::integer(Field::Q, c))).holds) << name << " c=" << c;
    }
    const Rational half(mpz_class(1), mpz_class(2));
    EXPECT_FALSE(check_pentagon(s.scaled(Scalar(half))).holds);
    EXPECT_TRUE(check_pentagon(s.scaled(Scalar::one(Field::Q))).holds);
  }
}

TEST(Property, EvaluationHomomorphismForDilogSides) {
  const Rational half(mpz_class(1), mpz_class(2));
  for (bool w_zero : {false, true}) {
    const DilogSides formal = dilog_sides(6, w_zero);
    const DilogSides numeric = dilog_sides(6, w_zero, half);
    EXPECT_EQ(formal.lhs.evaluate(half), numeric.lhs);
    EXPECT_EQ(formal.rhs.evaluate(half), numeric.rhs);
  }
}

TEST(Property, ReconstructionBasisCovariance) {
  std::mt19937 rng(17);
  for (const char* name : {"zn:2", "zn:3", "s3"}) {
    const Operator s = canonical_element(example_constants(name));
    const Factorization f = factorize(s);
    const std::size_t r = f.g.size();
    Matrix t(Field::Q, r, r);
    for (;;) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) t(i, j) = small_int(rng, -2, 2);
      if (rank(t) == r) break;
    }
    const Matrix tinv = invert(t);
    std::vector<Operator> g2(r, Operator(Field::Q, f.g[0].row_dims(), f.g[0].col_dims()));
    std::vector<Operator> f2(r, Operator(Field::Q, f.f[0].row_dims(), f.f[0].col_dims()));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        if (!t(a, b).is_zero()) g2[a] = g2[a] + f.g[b].scaled(t(a, b));
        if (!tinv(b, a).is_zero()) f2[a] = f2[a] + f.f[b].scaled(tinv(b, a));
      }
    Operator sum = Operator::kron(g2[0], f2[0]);
    for (std::size_t a = 1; a < r; ++a) sum = sum + Operator::kron(g2[a], f2[a]);
    EXPECT_EQ(sum, s) << name;

    const StructureConstants base = structure_constants(f.g, dual_matrices(f.g), f.f, dual_matrices(f.f));
    const StructureConstants moved = structure_constants(g2, dual_matrices(g2), f2, dual_matrices(f2));
    EXPECT_TRUE(check_associativity(moved).holds);
    EXPECT_TRUE(check_coassociativity(moved).holds);
    EXPECT_TRUE(check_compatibility(moved).holds);
    // m'_{ab}^c = T_a^x T_b^y m_{xy}^z (T^-1)_z^c
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t c = 0; c < r; ++c) {
          Scalar expected = Scalar::zero(Field::Q);
          for (const auto& [k, v] : base.m) expected += t(a, k[0]) * t(b, k[1]) * v * tinv(k[2], c);
          EXPECT_EQ(moved.mult(a, b, c), expected);
        }
  }
}
