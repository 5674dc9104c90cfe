#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "pentagon/catalog.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/relations.hpp"

using namespace pentagon;

namespace {

const Scalar kOne = Scalar::one(Field::Q);

StructureConstants empty_constants(std::size_t dim) {
  StructureConstants sc;
  sc.dim = dim;
  return sc;
}

Operator dense_op(const std::vector<std::vector<long>>& rows) {
  Operator op(Field::Q, {rows.size()}, {rows[0].size()});
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j]) op.accumulate(i, j, Scalar::integer(Field::Q, rows[i][j]));
  return op;
}

}  // namespace

TEST(Associativity, GroupAndTrivial) {
  EXPECT_TRUE(check_associativity(example_constants("zn:2")).holds);
  EXPECT_TRUE(check_associativity(example_constants("trivial")).holds);
  EXPECT_TRUE(check_associativity(example_constants("s3")).holds);
}

TEST(Associativity, BrokenTableHasWitness) {
  StructureConstants sc = empty_constants(2);
  sc.set_mult(0, 0, 1, kOne);
  sc.set_mult(1, 0, 0, kOne);
  // oracle: enumerate the 2^4 index tuples by hand
  bool oracle_fails = false;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t t = 0; t < 2; ++t) {
          Scalar l = Scalar::zero(Field::Q), r = Scalar::zero(Field::Q);
          for (std::size_t s = 0; s < 2; ++s) {
            l += sc.mult(a, b, s) * sc.mult(s, c, t);
            r += sc.mult(b, c, s) * sc.mult(a, s, t);
          }
          oracle_fails = oracle_fails || !(l == r);
        }
  ASSERT_TRUE(oracle_fails);
  const VerificationReport r = check_associativity(sc);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
}

TEST(Coassociativity, Examples) {
  EXPECT_TRUE(check_coassociativity(example_constants("zn:3")).holds);

  // divided powers: Delta(x^n) = sum binom(n,k) x^k (x) x^{n-k}, truncated at degree 3
  StructureConstants poly = empty_constants(4);
  const long binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  for (std::size_t n = 0; n < 4; ++n)
    for (std::size_t k = 0; k <= n; ++k) poly.set_comult(n, k, n - k, Scalar::integer(Field::Q, binom[n][k]));
  EXPECT_TRUE(check_coassociativity(poly).holds);

  StructureConstants bad = empty_constants(2);
  bad.set_comult(0, 0, 1, kOne);
  EXPECT_FALSE(check_coassociativity(bad).holds);
}

TEST(Compatibility, Examples) {
  EXPECT_TRUE(check_compatibility(example_constants("s3")).holds);
  EXPECT_TRUE(check_compatibility(example_constants("zn:5")).holds);
  EXPECT_TRUE(check_compatibility(example_constants("trivial")).holds);
  StructureConstants bad = example_constants("zn:2");
  bad.set_comult(0, 0, 0, Scalar::integer(Field::Q, 2));
  EXPECT_FALSE(check_compatibility(bad).holds);
}

TEST(BuiltIns, AllAxiomsHold) {
  for (const char* name : {"trivial", "zn:1", "zn:2", "zn:3", "zn:4", "zn:12", "s3", "dual:s3", "dual:zn:3"}) {
    const StructureConstants sc = example_constants(name);
    EXPECT_NO_THROW(sc.validate()) << name;
    for (const auto& r : {check_associativity(sc), check_coassociativity(sc), check_compatibility(sc),
                          check_unit_laws(sc), check_counit_laws(sc), check_antipode_inverse(sc)}) {
      EXPECT_TRUE(r.holds) << name << " " << r.relation;
    }
  }
}

TEST(Catalog, UnknownNames) {
  EXPECT_THROW(example_constants("zn:13"), Error);
  EXPECT_THROW(example_constants("zn:0"), Error);
  EXPECT_THROW(example_constants("a5"), Error);
}

TEST(AdjointRep, Z2) {
  const Representation rep = adjoint_rep(example_constants("zn:2"));
  EXPECT_EQ(rep.lower[1], dense_op({{0, 1}, {1, 0}}));
  EXPECT_EQ(rep.upper[0], dense_op({{1, 0}, {0, 0}}));
  EXPECT_EQ(rep.upper[1], dense_op({{0, 0}, {0, 1}}));
}

TEST(AdjointRep, TrivialAndZ3Shift) {
  const Representation one = adjoint_rep(example_constants("trivial"));
  EXPECT_EQ(one.lower[0], dense_op({{1}}));
  EXPECT_EQ(one.upper[0], dense_op({{1}}));
  const Representation rep = adjoint_rep(example_constants("zn:3"));
  EXPECT_EQ(rep.lower[1], dense_op({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
}

TEST(AdjointRep, GroupRepsAreDistinctPermutations) {
  const Representation rep = adjoint_rep(example_constants("s3"));
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
  for (const auto& op : rep.lower) {
    EXPECT_TRUE(op.is_permutation());
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (const Entry& e : op.entries()) cells.emplace_back(e.row, e.col);
    seen.insert(cells);
  }
  EXPECT_EQ(seen.size(), 6u);
}

TEST(Heisenberg, Examples) {
  const StructureConstants z2 = example_constants("zn:2");
  EXPECT_TRUE(check_heisenberg_relations(z2, adjoint_rep(z2)).holds);
  const StructureConstants one = example_constants("trivial");
  EXPECT_TRUE(check_heisenberg_relations(one, adjoint_rep(one)).holds);
  const StructureConstants s3 = example_constants("s3");
  EXPECT_TRUE(check_heisenberg_relations(s3, adjoint_rep(s3)).holds);

  Representation broken = adjoint_rep(z2);
  broken.upper[1] = Operator::identity(Field::Q, {2});
  const VerificationReport r = check_heisenberg_relations(z2, broken);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.witness.has_value());
}

TEST(CanonicalElement, Z2Entries) {
  const Operator s = canonical_element(example_constants("zn:2"));
  const std::vector<std::pair<std::array<std::size_t, 2>, std::array<std::size_t, 2>>> expected{
      {{0, 0}, {0, 0}}, {{0, 1}, {1, 1}}, {{1, 0}, {1, 0}}, {{1, 1}, {0, 1}}};
  EXPECT_EQ(s.nnz(), 4u);
  for (const auto& [row, col] : expected) EXPECT_TRUE(s.at(row, col).is_one());
}

TEST(CanonicalElement, MatchesGroupFormula) {
  EXPECT_EQ(oracle::to_dense(canonical_element(example_constants("trivial"))), oracle::identity(1));
  EXPECT_EQ(oracle::to_dense(canonical_element(example_constants("zn:3"))),
            oracle::group_canonical(oracle::cyclic_table(3)));
  EXPECT_EQ(oracle::to_dense(canonical_element(example_constants("s3"))),
            oracle::group_canonical(oracle::s3_table()));
  EXPECT_TRUE(canonical_element(example_constants("s3")).is_permutation());
}

TEST(CanonicalElement, PentagonForEveryBuiltIn) {
  for (const char* name : {"trivial", "zn:2", "zn:3", "zn:5", "s3", "dual:s3"}) {
    EXPECT_TRUE(check_pentagon(canonical_element(example_constants(name))).holds) << name;
  }
}

TEST(TildeRep, Z2IsTranspose) {
  const StructureConstants sc = example_constants("zn:2");
  const Representation rep = adjoint_rep(sc);
  const Representation t = tilde_rep(sc, rep);
  for (std::size_t a = 0; a < 2; ++a) EXPECT_EQ(t.lower[a], rep.lower[a].transpose());
}

TEST(TildeRep, Z3UsesInverse) {
  const StructureConstants sc = example_constants("zn:3");
  const Representation rep = adjoint_rep(sc);
  const Representation t = tilde_rep(sc, rep);
  EXPECT_EQ(t.lower[1], rep.lower[2].transpose());
  EXPECT_EQ(canonical_element(t), canonical_element(rep).transpose());
  EXPECT_TRUE(check_tilde_relations(sc, t).holds);
}

TEST(TildeRep, MissingAntipode) {
  StructureConstants sc = example_constants("zn:2");
  sc.antipode.reset();
  sc.antipode_inv.reset();
  EXPECT_THROW(tilde_rep(sc, adjoint_rep(sc)), MissingHopfData);
}

TEST(GroupAlgebra, Constants) {
  const StructureConstants z2 = group_algebra(cyclic_group_table(2));
  EXPECT_TRUE(z2.mult(1, 1, 0).is_one());
  EXPECT_TRUE(z2.comult(1, 1, 1).is_one());
  EXPECT_TRUE(z2.comult(1, 0, 1).is_zero());
  EXPECT_EQ(z2.m.size(), 4u);
  EXPECT_EQ(z2.mu.size(), 2u);
  EXPECT_EQ(group_algebra(cyclic_group_table(1)).dim, 1u);
  const StructureConstants s3 = group_algebra(symmetric3_table());
  EXPECT_EQ(s3.dim, 6u);
  EXPECT_EQ(symmetric3_table(), oracle::s3_table());
  bool commutative = true;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      for (std::size_t c = 0; c < 6; ++c) commutative = commutative && s3.mult(a, b, c) == s3.mult(b, a, c);
  EXPECT_FALSE(commutative);
}

TEST(GroupAlgebra, RejectsNonGroups) {
  EXPECT_THROW(group_algebra({{0, 0}, {0, 0}}), InvalidStructure);
  EXPECT_THROW(group_algebra({{0, 1}, {1, 1}}), InvalidStructure);
  EXPECT_THROW(group_algebra({{0, 2}, {1, 0}}), InvalidStructure);
}

TEST(Validate, RejectsBadData) {
  StructureConstants sc = example_constants("zn:2");
  sc.antipode = Tensor2{};
  EXPECT_THROW(sc.validate(), InvalidStructure);
  StructureConstants idx = example_constants("zn:2");
  idx.set_mult(0, 0, 0, kOne);
  idx.m[{0, 0, 5}] = kOne;
  EXPECT_THROW(idx.validate(), InvalidStructure);
}
