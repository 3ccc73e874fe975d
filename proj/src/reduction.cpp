#include "lagr/reduction.hpp"

#include <algorithm>
#include <cmath>

namespace lagr {

ReducedTangent horizontal_lift(const ComplexVector& z, const ComplexVector& t) {
  if (z.size() != t.size()) throw std::invalid_argument("horizontal_lift: dimension mismatch");
  return ReducedTangent{z, ComplexVector(t - z * (z.dot(t) / z.squaredNorm()))};
}

double reduced_omega(const ComplexVector& z, const ReducedTangent& v, const ReducedTangent& w,
                     double tol) {
  if (v.lift.size() != z.size() || w.lift.size() != z.size()) {
    throw std::invalid_argument("reduced_omega: dimension mismatch");
  }
  if (std::abs(z.norm() - 1.0) > tol) throw HorizontalityError("reduced_omega: base is not on the unit sphere");
  for (const ReducedTangent* t : {&v, &w}) {
    if (std::abs(z.dot(t->lift)) > tol * std::max(1.0, t->lift.norm())) {
      throw HorizontalityError("reduced_omega: lift is not horizontal");
    }
  }
  return omega_std(v.lift, w.lift);
}

namespace {

// Tangent vector of the unit sphere at z: drop the radial part Re<z, t> z.
ComplexVector sphere_tangent(const ComplexVector& z, const ComplexVector& t) {
  return t - z * z.dot(t).real();
}

}  // namespace

double alp_pullback(const ComplexVector& z, const ComplexVector& t1, const ComplexVector& t2) {
  return omega_std(t1, t2) - reduced_omega(z, horizontal_lift(z, t1), horizontal_lift(z, t2));
}

AlpEmbeddingCheck verify_alp_embedding(int n, int samples, std::uint64_t seed, double base_perturbation) {
  if (n < 1) throw std::invalid_argument("verify_alp_embedding: n must be >= 1");
  if (samples < 1) throw std::invalid_argument("verify_alp_embedding: samples must be >= 1");
  const int dim = n + 1;
  AlpEmbeddingCheck out;
  out.n = n;
  out.samples = samples;
  out.dim_m = 2 * dim;
  out.dim_g = 1;
  out.dim_z = out.dim_m - out.dim_g;
  out.dim_m_red = out.dim_m - 2 * out.dim_g;
  out.dim_product = out.dim_m + out.dim_m_red;

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const ComplexVector z = random_unit_vector(dim, rng);
    const ComplexVector t1 = sphere_tangent(z, random_unit_vector(dim, rng));
    const ComplexVector t2 = sphere_tangent(z, random_unit_vector(dim, rng));
    double pulled_back = 0.0;
    if (base_perturbation == 0.0) {
      pulled_back = alp_pullback(z, t1, t2);
    } else {
      ComplexVector tilted = z + base_perturbation * horizontal_lift(z, random_unit_vector(dim, rng)).lift;
      tilted /= tilted.norm();
      pulled_back = omega_std(t1, t2) -
                    omega_std(horizontal_lift(tilted, t1).lift, horizontal_lift(tilted, t2).lift);
    }
    out.max_residual = std::max(out.max_residual, std::abs(pulled_back));
  }

  // Measured dimensions at one more random point.
  const ComplexVector z = random_unit_vector(dim, rng);
  std::vector<ComplexVector> tangent, horizontal;
  for (int j = 0; j < dim; ++j) {
    for (const Complex unit : {Complex(1.0, 0.0), kI}) {
      ComplexVector e = ComplexVector::Zero(dim);
      e(j) = unit;
      tangent.push_back(sphere_tangent(z, e));
      horizontal.push_back(horizontal_lift(z, e).lift);
    }
  }
  out.measured_dim_z = numeric_rank(tangent);
  out.measured_dim_m_red = numeric_rank(horizontal);
  out.dimension_identity = out.measured_dim_z == out.dim_z && out.measured_dim_m_red == out.dim_m_red &&
                           2 * out.dim_z == out.dim_product;
  return out;
}

DualVector shifted_moment(const HamiltonianAction& a, const ComplexVector& m, const DualVector& mu) {
  if (mu.dim() != a.group_dim) throw std::invalid_argument("shifted_moment: dual dimension mismatch");
  return DualVector{moment(a, m).coords - mu.coords};
}

}  // namespace lagr
