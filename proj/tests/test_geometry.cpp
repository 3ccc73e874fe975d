#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lagr/geometry.hpp"

using namespace lagr;

namespace {

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  return (a + a.adjoint()) / 2.0;
}

// exp(i H) through the spectral decomposition of H.
ComplexMatrix spectral_exp_i(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  ComplexVector phases(h.rows());
  for (int k = 0; k < h.rows(); ++k) phases(k) = std::polar(1.0, es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexVector vec(std::initializer_list<Complex> xs) {
  ComplexVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Complex x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST(Geometry, InnerProductIsConjugateLinearInFirstSlot) {
  const ComplexVector u = vec({kI, 0.0});
  const ComplexVector v = vec({1.0, 0.0});
  EXPECT_NEAR(std::abs(hermitian_inner(u, v) - (-kI)), 0.0, 1e-15);
  EXPECT_THROW(hermitian_inner(u, vec({1.0})), std::invalid_argument);
}

TEST(Geometry, OmegaOfZAndIZIsNormSquared) {
  std::mt19937_64 rng(1);
  for (int s = 0; s < 20; ++s) {
    const ComplexVector z = 3.0 * random_unit_vector(4, rng);
    EXPECT_NEAR(omega_std(z, kI * z), z.squaredNorm(), 1e-12);
  }
}

TEST(Geometry, OmegaIsAntisymmetricAndRealBilinear) {
  std::mt19937_64 rng(2);
  for (int s = 0; s < 50; ++s) {
    const ComplexVector u = random_unit_vector(3, rng), v = random_unit_vector(3, rng),
                        w = random_unit_vector(3, rng);
    EXPECT_NEAR(omega_std(u, v), -omega_std(v, u), 1e-15);
    EXPECT_NEAR(omega_std(u, 2.5 * v - 0.5 * w), 2.5 * omega_std(u, v) - 0.5 * omega_std(u, w), 1e-14);
    EXPECT_NEAR(omega_std(u, u), 0.0, 1e-15);
  }
}

TEST(Geometry, ProjectivePointRejectsDegenerateRepresentatives) {
  EXPECT_THROW(ProjectivePoint{ComplexVector::Zero(3)}, std::invalid_argument);
  EXPECT_THROW(ProjectivePoint{ComplexVector()}, std::invalid_argument);
  ComplexVector bad = ComplexVector::Ones(2);
  bad(0) = Complex(std::nan(""), 0.0);
  EXPECT_THROW(ProjectivePoint{bad}, std::invalid_argument);
}

TEST(Geometry, FubiniStudyIsRepresentativeIndependent) {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 30; ++s) {
    const ComplexVector z = random_unit_vector(4, rng);
    const ComplexVector a = random_unit_vector(4, rng), b = random_unit_vector(4, rng);
    const ProjectivePoint p(z);
    const double base = fs_omega(p, TangentVector{p, a}, TangentVector{p, b});
    const Complex lambda = std::polar(2.7, 0.9);
    const ProjectivePoint q(lambda * z);
    // Lifts scale with the representative.
    EXPECT_NEAR(fs_omega(q, TangentVector{q, lambda * a}, TangentVector{q, lambda * b}), base, 1e-12);
    // Vertical components are ignored.
    EXPECT_NEAR(fs_omega(p, TangentVector{p, a + 0.3 * kI * z}, TangentVector{p, b}), base, 1e-12);
  }
}

TEST(Geometry, ProjectiveDistance) {
  std::mt19937_64 rng(4);
  const ComplexVector z = random_unit_vector(3, rng);
  EXPECT_NEAR(projective_distance(ProjectivePoint(z), ProjectivePoint(std::polar(5.0, 1.2) * z)), 0.0, 1e-15);
  EXPECT_NEAR(projective_distance(ProjectivePoint(vec({1.0, 0.0})), ProjectivePoint(vec({0.0, 1.0}))),
              std::numbers::pi / 2, 1e-15);
  // Small angles keep full relative precision.
  const double eps = 1e-12;
  EXPECT_NEAR(projective_distance(ProjectivePoint(vec({1.0, 0.0})),
                                  ProjectivePoint(vec({std::cos(eps), std::sin(eps)}))) / eps,
              1.0, 1e-9);
}

TEST(Geometry, MatrixExpMatchesSpectralOracle) {
  std::mt19937_64 rng(5);
  for (int n : {1, 2, 3, 5}) {
    for (int s = 0; s < 10; ++s) {
      const ComplexMatrix h = 3.0 * random_hermitian(n, rng);
      EXPECT_LT((matrix_exp(kI * h) - spectral_exp_i(h)).cwiseAbs().maxCoeff(), 1e-11);
    }
  }
}

TEST(Geometry, MatrixExpOfNilpotentAndInverse) {
  ComplexMatrix n = ComplexMatrix::Zero(2, 2);
  n(0, 1) = 1.0;
  ComplexMatrix expected = ComplexMatrix::Identity(2, 2);
  expected(0, 1) = 4.0;
  EXPECT_LT((matrix_exp(n, 4.0) - expected).norm(), 1e-14);

  std::mt19937_64 rng(6);
  ComplexMatrix x = random_hermitian(3, rng) + kI * random_hermitian(3, rng);
  EXPECT_LT((matrix_exp(x) * matrix_exp(x, -1.0) - ComplexMatrix::Identity(3, 3)).norm(), 1e-10);
}

TEST(Geometry, NumericRank) {
  const ComplexVector e = vec({1.0, 0.0});
  std::vector<ComplexVector> family{e, kI * e};
  // e and i e are independent over R.
  EXPECT_EQ(numeric_rank(family), 2);
  family.push_back(Complex(2.0, -3.0) * e);
  EXPECT_EQ(numeric_rank(family), 2);
  std::vector<ComplexVector> zeros{ComplexVector::Zero(2)};
  EXPECT_EQ(numeric_rank(zeros), 0);
  EXPECT_THROW(numeric_rank(std::vector<ComplexVector>{}), std::invalid_argument);
}

TEST(Geometry, RandomSpecialUnitary) {
  std::mt19937_64 rng(7);
  for (int n : {2, 3, 4}) {
    for (int s = 0; s < 20; ++s) {
      const ComplexMatrix g = random_special_unitary(n, rng);
      EXPECT_TRUE(is_unitary(g, 1e-12));
      EXPECT_NEAR(std::abs(g.determinant() - 1.0), 0.0, 1e-12);
    }
  }
}
