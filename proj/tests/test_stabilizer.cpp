#include <gtest/gtest.h>

#include <numbers>

#include "lagr/stabilizer.hpp"

using namespace lagr;

TEST(Stabilizer, GeneratorsFixTheBaseLine) {
  for (int k = 0; k < 6; ++k) {
    const StabilizerCondition c = stabilizer_condition(cubic_rotation(k));
    EXPECT_TRUE(c.holds);
    // diag(alpha, conj alpha) scales x^3 by alpha^3 = (-1)^k.
    EXPECT_NEAR(std::abs(c.lambda - std::polar(1.0, std::numbers::pi * k)), 0.0, 1e-12);
  }
  const StabilizerCondition f = stabilizer_condition(cubic_flip());
  EXPECT_TRUE(f.holds);
  EXPECT_NEAR(std::abs(f.lambda), 1.0, 1e-12);
  EXPECT_FALSE(stabilizer_condition(matrix_exp(ComplexMatrix{{0.3 * kI, 0.0}, {0.0, -0.3 * kI}})).holds);
  EXPECT_THROW(stabilizer_condition(2.0 * ComplexMatrix::Identity(2, 2)), GroupMembershipError);
}

TEST(Stabilizer, ClosureHasTwelveElements) {
  const FiniteMatrixGroup g = group_closure(cubic_stabilizer_generators());
  EXPECT_EQ(g.size(), 12);
  EXPECT_TRUE(g.is_latin_square());
  EXPECT_FALSE(g.is_abelian());
  for (const auto& e : g.elements) {
    EXPECT_TRUE(is_unitary(e, 1e-12));
    EXPECT_TRUE(stabilizer_condition(e).holds);
  }
}

TEST(Stabilizer, ProjectiveImageIsD3) {
  const FiniteMatrixGroup g = group_closure(cubic_stabilizer_generators());
  const QuotientGroup q = projective_image(g);
  EXPECT_EQ(q.kernel_order, 2);
  EXPECT_EQ(q.image.size(), 6);
  EXPECT_TRUE(q.image.is_latin_square());
  EXPECT_TRUE(is_d3(q.image));
  EXPECT_EQ(count_isomorphisms_to_s3(q.image), 6);
}

TEST(Stabilizer, CyclicGroupIsNotS3) {
  const FiniteMatrixGroup z6 = group_closure({cubic_rotation(1)});
  EXPECT_EQ(z6.size(), 6);
  EXPECT_TRUE(is_cyclic(z6));
  EXPECT_EQ(count_isomorphisms_to_s3(z6), 0);
  EXPECT_FALSE(is_d3(z6));
}

TEST(Stabilizer, Relations) {
  const FiniteMatrixGroup g = group_closure(cubic_stabilizer_generators());
  const RelationReport r = verify_relations(g);
  EXPECT_LT(r.b_squared_vs_minus_identity, 1e-12);
  EXPECT_LT(r.b_squared_vs_a_cubed, 1e-12);
  EXPECT_LT(r.ba_vs_a5b, 1e-12);
  EXPECT_EQ(r.commutator_order, 3);
  EXPECT_TRUE(r.commutator_is_a_squared_powers);
  EXPECT_EQ(commutator_subgroup(g).size(), 3u);
}

TEST(Stabilizer, ElementOrdersOfDicyclicGroup) {
  // Dic_3: one element of order 1, one of 2, two of 3, two of 6, six of 4.
  const FiniteMatrixGroup g = group_closure(cubic_stabilizer_generators());
  std::map<int, int> counts;
  for (int i = 0; i < g.size(); ++i) ++counts[g.order_of(i)];
  EXPECT_EQ(counts, (std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}));
}

TEST(Stabilizer, ClosureCapRaises) {
  const double irrational = std::sqrt(2.0);
  const ComplexMatrix g{{std::polar(1.0, irrational), 0.0}, {0.0, std::polar(1.0, -irrational)}};
  EXPECT_THROW(group_closure({g}, 50), ClosureError);
}

TEST(Stabilizer, SearchFindsExactlyTheClosure) {
  const StabilizerSearch s = full_stabilizer_search(200, 5);
  EXPECT_EQ(s.outside, 0);
  EXPECT_EQ(s.found.size(), 12u);
  EXPECT_TRUE(s.matches_closure);
  EXPECT_TRUE(s.all_satisfy_condition);
}

TEST(Stabilizer, SunProjectiveStabilizerIsCyclic) {
  for (int n : {2, 3, 4, 5}) {
    const FiniteMatrixGroup g = sun_projective_stabilizer(n);
    EXPECT_EQ(g.size(), n);
    EXPECT_TRUE(is_cyclic(g));
    for (const auto& e : g.elements) EXPECT_NEAR(std::abs(e.determinant() - 1.0), 0.0, 1e-12);
  }
}
