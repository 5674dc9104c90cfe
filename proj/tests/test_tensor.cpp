#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pentagon/catalog.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/linalg.hpp"
#include "pentagon/operator.hpp"

using namespace pentagon;

namespace {

Operator matrix(std::vector<std::vector<long>> rows) {
  const std::size_t r = rows.size(), c = rows[0].size();
  Operator op(Field::Q, {r}, {c});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rows[i][j] != 0) op.accumulate(i, j, Scalar::integer(Field::Q, rows[i][j]));
  return op;
}

Operator z2_canonical() { return canonical_element(example_constants("zn:2")); }

}  // namespace

TEST(Compose, IdentityAndSwap) {
  const Operator x = matrix({{1, 2}, {3, 4}});
  EXPECT_EQ(Operator::identity(Field::Q, {2}) * x, x);
  const Operator p = swap_operator(Field::Q, 3);
  EXPECT_EQ(p * p, Operator::identity(Field::Q, {3, 3}));
  EXPECT_TRUE(p.is_permutation());
}

TEST(Compose, SwapTimesProjector) {
  const Operator swap = swap_operator(Field::Q, 2);
  const Operator proj = Operator::kron(matrix({{1, 0}, {0, 0}}), Operator::identity(Field::Q, {2}));
  EXPECT_EQ(oracle::to_dense(swap * proj), oracle::mul(oracle::to_dense(swap), oracle::to_dense(proj)));
  EXPECT_EQ(swap * proj * swap, Operator::kron(Operator::identity(Field::Q, {2}), matrix({{1, 0}, {0, 0}})));
}

TEST(Compose, DimensionAndFieldErrors) {
  EXPECT_THROW(matrix({{1, 2}}) * matrix({{1, 2}}), DimensionMismatch);
  Operator a(Field::Qq, {1}, {1});
  EXPECT_THROW(a * matrix({{1}}), FieldMismatch);
}

TEST(Compose, NoExplicitZeros) {
  const Operator a = matrix({{1, 1}, {0, 0}});
  const Operator b = matrix({{1, 0}, {-1, 0}});
  EXPECT_EQ((a * b).nnz(), 0u);
}

TEST(PlaceOnLegs, SingleLeg) {
  const Operator x = matrix({{1, 2}, {3, 4}});
  const Operator placed = place_on_legs(x, {2, {0}, {2, 2}});
  EXPECT_EQ(placed, Operator::kron(x, Operator::identity(Field::Q, {2})));
}

TEST(PlaceOnLegs, LegsZeroTwoMatchesDenseOracle) {
  const Operator s = z2_canonical();
  const Operator placed = place_on_legs(s, {3, {0, 2}, {2, 2, 2}});
  EXPECT_EQ(oracle::to_dense(placed), oracle::place3(oracle::to_dense(s), 2, 0, 2));
  const Operator reversed = place_on_legs(s, {3, {2, 0}, {2, 2, 2}});
  EXPECT_EQ(oracle::to_dense(reversed), oracle::place3(oracle::to_dense(s), 2, 2, 0));
}

TEST(PlaceOnLegs, IdentityStaysIdentity) {
  const Operator id = Operator::identity(Field::Q, {3, 3});
  EXPECT_EQ(place_on_legs(id, {3, {2, 0}, {3, 3, 3}}), Operator::identity(Field::Q, {3, 3, 3}));
}

TEST(PlaceOnLegs, Errors) {
  const Operator s = z2_canonical();
  EXPECT_THROW(place_on_legs(s, {3, {1, 1}, {2, 2, 2}}), DimensionMismatch);
  EXPECT_THROW(place_on_legs(s, {3, {0, 3}, {2, 2, 2}}), DimensionMismatch);
  EXPECT_THROW(place_on_legs(s, {3, {0, 1}, {2, 3, 2}}), DimensionMismatch);
}

TEST(PartialTranspose, KroneckerFactors) {
  const Operator a = matrix({{1, 2}, {3, 4}});
  const Operator b = matrix({{0, 5}, {6, 7}});
  EXPECT_EQ(Operator::kron(a, b).partial_transpose(0), Operator::kron(a.transpose(), b));
  const Operator s = z2_canonical();
  EXPECT_EQ(s.partial_transpose(1).partial_transpose(1), s);
  EXPECT_THROW(s.partial_transpose(2), DimensionMismatch);
}

TEST(PartialTranspose, Z2EntrywiseSwap) {
  const Operator s = z2_canonical();
  const Operator t = s.partial_transpose(1);
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t h = 0; h < 2; ++h)
      for (std::size_t g2 = 0; g2 < 2; ++g2)
        for (std::size_t h2 = 0; h2 < 2; ++h2) {
          const std::array<std::size_t, 2> row{g, h2}, col{g2, h};
          const std::array<std::size_t, 2> orow{g, h}, ocol{g2, h2};
          EXPECT_EQ(t.at(row, col), s.at(orow, ocol));
        }
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(Operator::identity(Field::Q, {3})), Operator::identity(Field::Q, {3}));
  const Operator p = z2_canonical();
  EXPECT_EQ(invert(p), p.transpose());
  // 2x2 adjugate: [[a,b],[c,d]]^-1 = [[d,-b],[-c,a]] / (ad - bc)
  EXPECT_EQ(invert(matrix({{1, 1}, {0, 1}})), matrix({{1, -1}, {0, 1}}));
}

TEST(Invert, SingularReportsRank) {
  try {
    invert(matrix({{1, 2}, {2, 4}}), "M");
    FAIL();
  } catch (const SingularMatrix& e) {
    EXPECT_EQ(e.rank(), 1u);
    EXPECT_NE(std::string(e.what()).find("M"), std::string::npos);
  }
}

TEST(Invert, OverQq) {
  Operator m(Field::Qq, {2}, {2});
  m.accumulate(0, 0, Scalar::one(Field::Qq));
  m.accumulate(0, 1, Scalar::q());
  m.accumulate(1, 0, Scalar::q());
  m.accumulate(1, 1, Scalar::one(Field::Qq));
  EXPECT_EQ(invert(m) * m, Operator::identity(Field::Qq, {2}));
}

TEST(RankFactorize, Basics) {
  EXPECT_EQ(rank_factorize(Operator(Field::Q, {3}, {4})).rank, 0u);
  EXPECT_EQ(rank_factorize(Operator::identity(Field::Q, {5})).rank, 5u);
  const Operator m = matrix({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const RankFactorization f = rank_factorize(m);
  EXPECT_EQ(f.rank, 2u);
  EXPECT_EQ(f.left * f.right, Matrix::from_operator(m));
}

TEST(Reshuffle, Z2ExplicitMatrix) {
  const Operator m = reshuffle(z2_canonical(), reconstruction_grouping());
  // M[(i1,j1),(i2,j2)] = S[(i1,i2),(j1,j2)], enumerated directly
  const oracle::Dense s = oracle::to_dense(z2_canonical());
  oracle::Dense expected = oracle::zeros(4, 4);
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2) expected[i1 * 2 + j1][i2 * 2 + j2] = s[i1 * 2 + i2][j1 * 2 + j2];
  EXPECT_EQ(oracle::to_dense(m), expected);
  EXPECT_EQ(rank(Matrix::from_operator(m)), 2u);
  EXPECT_EQ(oracle::rank(expected), 2u);
}

TEST(Reshuffle, PureTensorHasRankOne) {
  const Operator a = matrix({{1, 2}, {3, 4}});
  const Operator b = matrix({{0, 5}, {6, 7}});
  EXPECT_EQ(rank(Matrix::from_operator(reshuffle(Operator::kron(a, b), reconstruction_grouping()))), 1u);
  // The identity on d (x) d is the pure tensor I (x) I.
  const Operator id = Operator::identity(Field::Q, {3, 3});
  EXPECT_EQ(rank(Matrix::from_operator(reshuffle(id, reconstruction_grouping()))), 1u);
}

TEST(Reshuffle, InvalidGrouping) {
  SlotGrouping bad = reconstruction_grouping();
  bad.col_slots[0] = bad.row_slots[0];
  EXPECT_THROW(reshuffle(z2_canonical(), bad), DimensionMismatch);
}
