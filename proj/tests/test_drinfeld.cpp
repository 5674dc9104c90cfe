#include <gtest/gtest.h>

#include "pentagon/catalog.hpp"
#include "pentagon/drinfeld.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/linalg.hpp"

using namespace pentagon;

namespace {

Operator canonical(const char* name) { return canonical_element(example_constants(name)); }

struct Built {
  StructureConstants sc;
  Representation rep;
  Representation tilde;
};

Built build(const char* name) {
  Built b{example_constants(name), {}, {}};
  b.rep = adjoint_rep(b.sc);
  b.tilde = tilde_rep(b.sc, b.rep);
  return b;
}

}  // namespace

TEST(SFamily, IdentityGivesIdentities) {
  const Operator id = Operator::identity(Field::Q, {3, 3});
  const SMatrixFamily fam = s_family(id);
  EXPECT_EQ(fam.s_tilde, id);
  EXPECT_EQ(fam.s_prime, id);
  EXPECT_EQ(fam.s_double_prime, id);
}

TEST(SFamily, Z2TransposeIsInverse) {
  const Operator s = canonical("zn:2");
  const SMatrixFamily fam = s_family(s);
  EXPECT_EQ(fam.s_tilde, s.transpose());
  EXPECT_EQ(fam.s_tilde, invert(s));
  EXPECT_EQ(fam.s_prime, invert(s).partial_transpose(0));
  EXPECT_EQ(fam.s_double_prime * s.partial_transpose(1), Operator::identity(Field::Q, {2, 2}));
}

TEST(SFamily, SingularInputsAreNamed) {
  Operator singular(Field::Q, {2, 2}, {2, 2});
  singular.accumulate(0, 0, Scalar::one(Field::Q));
  EXPECT_THROW(s_family(singular), SingularMatrix);

  // invertible, but S^{t2} is singular: the swap P has P^{t2} = |vec I><vec I| of rank 1
  const Operator p = swap_operator(Field::Q, 2);
  try {
    s_family(p);
    FAIL();
  } catch (const CrossInvertibilityError& e) {
    EXPECT_NE(std::string(e.what()).find("S^{t2}"), std::string::npos);
  }
}

TEST(SPrimesFromReps, TrivialIsOne) {
  const Built b = build("trivial");
  const CanonicalFamily fam = s_primes_from_reps(b.sc, b.rep, b.tilde);
  const Operator one = Operator::identity(Field::Q, {1, 1});
  EXPECT_EQ(fam.s_prime, one);
  EXPECT_EQ(fam.s_double_prime, one);
  EXPECT_EQ(fam.s_tilde, one);
}

TEST(SPrimesFromReps, AgreeWithTransposeFormulas) {
  for (const char* name : {"zn:2", "zn:3", "s3", "dual:s3"}) {
    const Built b = build(name);
    const CanonicalFamily fam = s_primes_from_reps(b.sc, b.rep, b.tilde);
    ASSERT_EQ(fam.agreement.size(), 3u);
    for (const auto& r : fam.agreement) EXPECT_TRUE(r.holds) << name << " " << r.detail;
  }
  const Built z3 = build("zn:3");
  const Operator s = canonical("zn:3");
  EXPECT_EQ(s_primes_from_reps(z3.sc, z3.rep, z3.tilde).s_prime, invert(s).partial_transpose(0));
}

TEST(SPrimesFromReps, MissingAntipode) {
  Built b = build("zn:2");
  b.sc.antipode.reset();
  b.sc.antipode_inv.reset();
  EXPECT_THROW(s_primes_from_reps(b.sc, b.rep, b.tilde), MissingHopfData);
  EXPECT_THROW(drinfeld_generators(b.sc, b.rep, b.tilde), MissingHopfData);
  EXPECT_THROW(check_double_consistency(b.sc), MissingHopfData);
}

TEST(Generators, TrivialAndZ2Shapes) {
  const Built one = build("trivial");
  const DoubleGenerators g1 = drinfeld_generators(one.sc, one.rep, one.tilde);
  EXPECT_EQ(g1.e[0], Operator::identity(Field::Q, {1, 1}));
  EXPECT_EQ(g1.e_dual[0], Operator::identity(Field::Q, {1, 1}));

  const Built z2 = build("zn:2");
  const DoubleGenerators g = drinfeld_generators(z2.sc, z2.rep, z2.tilde);
  ASSERT_EQ(g.e.size(), 2u);
  EXPECT_EQ(g.e[0].rows(), 4u);
  EXPECT_TRUE(check_drinfeld_relations(z2.sc, g.e, g.e_dual).holds);
}

TEST(RMatrix, FactorizedEqualsCanonical) {
  for (const char* name : {"trivial", "zn:2", "zn:3", "zn:4", "s3", "dual:s3"}) {
    const Built b = build(name);
    const RMatrix factorized = r_matrix(s_family(canonical_element(b.rep)));
    const RMatrix summed = canonical_r_matrix(drinfeld_generators(b.sc, b.rep, b.tilde));
    EXPECT_EQ(factorized.op, summed.op) << name;
    EXPECT_EQ(factorized.legs_per_site, 2u);
  }
}

TEST(RMatrix, IdentityFamily) {
  const RMatrix r = r_matrix(s_family(Operator::identity(Field::Q, {2, 2})));
  EXPECT_EQ(r.op, Operator::identity(Field::Q, {2, 2, 2, 2}));
}

TEST(RMatrix, YangBaxterZ2AndZ3) {
  const VerificationReport z2 = check_yang_baxter(r_matrix(s_family(canonical("zn:2"))));
  EXPECT_TRUE(z2.holds);
  EXPECT_EQ(z2.space_dim, 64u);
  const VerificationReport z3 = check_yang_baxter(r_matrix(s_family(canonical("zn:3"))));
  EXPECT_TRUE(z3.holds);
  EXPECT_EQ(z3.space_dim, 729u);
}

TEST(DoubleConsistency, AllPass) {
  for (const char* name : {"trivial", "zn:2", "zn:3", "s3"}) {
    const auto reports = check_double_consistency(example_constants(name));
    EXPECT_EQ(reports.size(), 11u);
    for (const auto& r : reports) EXPECT_TRUE(r.holds) << name << " " << r.relation;
  }
}

TEST(DoubleConsistency, ZeroAntipodeRejected) {
  StructureConstants sc = example_constants("zn:2");
  sc.antipode = Tensor2{};
  EXPECT_THROW(check_double_consistency(sc), InvalidStructure);
}
