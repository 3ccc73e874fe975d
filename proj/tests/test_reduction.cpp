#include <gtest/gtest.h>

#include "lagr/reduction.hpp"

using namespace lagr;

TEST(Reduction, PullbackVanishesOnTheLevelSet) {
  for (int n : {1, 2, 3}) {
    const AlpEmbeddingCheck c = verify_alp_embedding(n, 100, 42);
    EXPECT_LT(c.max_residual, 1e-8) << n;
    EXPECT_EQ(c.dim_z, 2 * n + 1);
    EXPECT_EQ(c.dim_m_red, 2 * n);
    EXPECT_EQ(c.measured_dim_z, c.dim_z);
    EXPECT_EQ(c.measured_dim_m_red, c.dim_m_red);
    EXPECT_EQ(2 * c.dim_z, c.dim_product);
    EXPECT_TRUE(c.dimension_identity);
  }
}

TEST(Reduction, ResidualRespondsLinearlyToBaseErrors) {
  const double r1 = verify_alp_embedding(2, 200, 7, 1e-4).max_residual;
  const double r2 = verify_alp_embedding(2, 200, 7, 1e-3).max_residual;
  EXPECT_GT(r1, 1e-7);
  EXPECT_NEAR(r2 / r1, 10.0, 1.0);
}

TEST(Reduction, HorizontalLiftIsOrthogonalAndIdempotent) {
  std::mt19937_64 rng(51);
  const ComplexVector z = random_unit_vector(3, rng);
  const ComplexVector t = random_unit_vector(3, rng);
  const ReducedTangent h = horizontal_lift(z, t);
  EXPECT_LT(std::abs(z.dot(h.lift)), 1e-15);
  EXPECT_LT((horizontal_lift(z, h.lift).lift - h.lift).norm(), 1e-15);
}

TEST(Reduction, ReducedOmegaRejectsBadInput) {
  std::mt19937_64 rng(52);
  const ComplexVector z = random_unit_vector(3, rng);
  const ReducedTangent good = horizontal_lift(z, random_unit_vector(3, rng));
  const ReducedTangent vertical{z, kI * z};
  EXPECT_THROW(reduced_omega(z, good, vertical), HorizontalityError);
  EXPECT_THROW(reduced_omega(2.0 * z, good, good), HorizontalityError);
  EXPECT_NO_THROW(reduced_omega(z, good, good));
}

TEST(Reduction, ReducedOmegaIsInvariantUnderTheCircle) {
  std::mt19937_64 rng(53);
  const ComplexVector z = random_unit_vector(3, rng);
  const ComplexVector a = horizontal_lift(z, random_unit_vector(3, rng)).lift;
  const ComplexVector b = horizontal_lift(z, random_unit_vector(3, rng)).lift;
  const Complex u = std::polar(1.0, 0.77);
  EXPECT_NEAR(reduced_omega(u * z, {u * z, u * a}, {u * z, u * b}), reduced_omega(z, {z, a}, {z, b}), 1e-14);
}

TEST(Reduction, ShiftedMomentVanishesAtItsOwnValue) {
  const HamiltonianAction a = su2_cubic();
  std::mt19937_64 rng(54);
  for (int s = 0; s < 10; ++s) {
    const ComplexVector m = random_unit_vector(4, rng);
    EXPECT_LT(shifted_moment(a, m, moment(a, m)).norm(), 1e-15);
  }
  EXPECT_THROW(shifted_moment(a, ComplexVector::Unit(4, 0), DualVector{RealVector::Zero(2)}), std::invalid_argument);
}
