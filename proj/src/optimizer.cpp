#include "lagr/optimizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lagr {

void DescentParams::validate() const {
  if (max_iters <= 0) throw std::invalid_argument("DescentParams: max_iters must be positive");
  if (!(grad_tol > 0.0)) throw std::invalid_argument("DescentParams: grad_tol must be positive");
  if (!(step_init > 0.0)) throw std::invalid_argument("DescentParams: step_init must be positive");
  if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw std::invalid_argument("DescentParams: armijo_c must be in (0,1)");
  if (!(backtrack_ratio > 0.0 && backtrack_ratio < 1.0)) {
    throw std::invalid_argument("DescentParams: backtrack_ratio must be in (0,1)");
  }
}

double moment_norm_squared(const HamiltonianAction& a, const ComplexVector& z) {
  return moment(a, z).coords.squaredNorm();
}

namespace {

double central_difference(const HamiltonianAction& a, const ComplexVector& z,
                          const ComplexVector& dir, double h) {
  return (moment_norm_squared(a, ComplexVector(z + h * dir)) -
          moment_norm_squared(a, ComplexVector(z - h * dir))) /
         (2.0 * h);
}

// Removes the components of g along z (and along i z for projective actions),
// using the real inner product Re<., .>.
ComplexVector project_to_tangent(const HamiltonianAction& a, const ComplexVector& z,
                                 const ComplexVector& g) {
  ComplexVector out = g - z * z.dot(g).real();
  if (a.projective) {
    const ComplexVector iz = kI * z;
    out -= iz * iz.dot(out).real();
  }
  return out;
}

}  // namespace

ComplexVector moment_norm_gradient(const HamiltonianAction& a, const ComplexVector& z) {
  constexpr double h = 1e-6;
  const Eigen::Index n = z.size();
  ComplexVector grad(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double parts[2];
    for (int part = 0; part < 2; ++part) {
      ComplexVector dir = ComplexVector::Zero(n);
      dir(j) = part == 0 ? Complex(1.0, 0.0) : kI;
      const double coarse = central_difference(a, z, dir, h);
      const double fine = central_difference(a, z, dir, h / 2.0);
      parts[part] = (4.0 * fine - coarse) / 3.0;
    }
    grad(j) = Complex(parts[0], parts[1]);
  }
  return project_to_tangent(a, z, grad);
}

DescentResult minimize_moment_norm(const HamiltonianAction& a, const ComplexVector& start,
                                   const DescentParams& params) {
  params.validate();
  if (start.size() != a.ambient_dim) throw std::invalid_argument("minimize_moment_norm: dimension mismatch");
  const double start_norm = start.norm();
  if (start_norm == 0.0) throw std::invalid_argument("minimize_moment_norm: zero start");

  DescentResult res;
  res.point = start / start_norm;
  res.objective = moment_norm_squared(a, res.point);
  ComplexVector grad = moment_norm_gradient(a, res.point);
  res.grad_norm = grad.norm();

  while (res.iters < params.max_iters && res.grad_norm > params.grad_tol) {
    const double slope = res.grad_norm * res.grad_norm;
    double step = params.step_init;
    bool accepted = false;
    while (step > 1e-30) {
      ComplexVector trial = res.point - step * grad;
      trial /= trial.norm();
      const double f = moment_norm_squared(a, trial);
      if (f <= res.objective - params.armijo_c * step * slope) {
        if (f > res.objective) throw std::logic_error("minimize_moment_norm: objective increased");
        res.point = std::move(trial);
        res.objective = f;
        accepted = true;
        break;
      }
      step *= params.backtrack_ratio;
    }
    if (!accepted) break;
    ++res.iters;
    grad = moment_norm_gradient(a, res.point);
    res.grad_norm = grad.norm();
  }
  res.converged = res.grad_norm <= params.grad_tol;
  return res;
}

ComplexVector seeded_start(const HamiltonianAction& a, std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  return random_unit_vector(a.ambient_dim, rng);
}

namespace {

double alignment_objective(const ComplexVector& p, const ComplexVector& q) {
  return (q - p * p.dot(q)).squaredNorm();
}

}  // namespace

OrbitAlignment align_in_orbit(const HamiltonianAction& a, const ProjectivePoint& base,
                              const ProjectivePoint& q, const ComplexMatrix& start, int max_iters) {
  if (base.dim() != a.ambient_dim || q.dim() != a.ambient_dim) {
    throw std::invalid_argument("align_in_orbit: dimension mismatch");
  }
  require_group_element(a, start);
  const ComplexVector b = base.unit_rep();
  const ComplexVector target = q.unit_rep();
  std::vector<ComplexMatrix> generators;
  for (const auto& xi : a.lie_basis) generators.push_back(a.derived(xi));

  auto image = [&](const ComplexMatrix& g) {
    ComplexVector p = a.representation(g) * b;
    return ComplexVector(p / p.norm());
  };

  OrbitAlignment out;
  out.element = start;
  ComplexVector p = image(out.element);
  double f = alignment_objective(p, target);
  const auto n = static_cast<Eigen::Index>(p.size());
  for (int it = 0; it < max_iters && f > 1e-32; ++it) {
    const Complex overlap = p.dot(target);
    const ComplexVector r = target - p * overlap;
    RealMatrix jac(2 * n, a.group_dim);
    for (int k = 0; k < a.group_dim; ++k) {
      const ComplexVector dp = generators[static_cast<std::size_t>(k)] * p;
      const ComplexVector dr = -(dp * overlap + p * dp.dot(target));
      jac.col(k) << dr.real(), dr.imag();
    }
    RealVector rhs(2 * n);
    rhs << -r.real(), -r.imag();
    Eigen::JacobiSVD<RealMatrix> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    const RealVector delta = svd.solve(rhs);

    double step = 1.0;
    bool accepted = false;
    while (step > 1e-12) {
      const ComplexMatrix g = matrix_exp(lie_element(a, delta), step) * out.element;
      const ComplexVector trial = image(g);
      const double ft = alignment_objective(trial, target);
      if (ft < f) {
        out.element = g;
        p = trial;
        f = ft;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    out.iters = it + 1;
    if (!accepted) break;
  }
  out.distance = projective_distance(ProjectivePoint(p), q);
  return out;
}

OrbitAlignment best_orbit_alignment(const HamiltonianAction& a, const ProjectivePoint& base,
                                    const ProjectivePoint& q, const DescentParams& params,
                                    int starts) {
  if (starts < 1) throw std::invalid_argument("best_orbit_alignment: starts must be >= 1");
  std::mt19937_64 rng(params.seed);
  OrbitAlignment best;
  best.distance = std::numeric_limits<double>::infinity();
  for (int s = 0; s < starts; ++s) {
    const ComplexMatrix g0 = s == 0 ? identity_element(a) : a.random_element(rng);
    OrbitAlignment candidate = align_in_orbit(a, base, q, g0);
    if (candidate.distance < best.distance) best = std::move(candidate);
    if (best.distance < 1e-14) break;
  }
  return best;
}

double orbit_membership(const HamiltonianAction& a, const ProjectivePoint& base,
                        const ProjectivePoint& q, const DescentParams& params, int starts) {
  return best_orbit_alignment(a, base, q, params, starts).distance;
}

}  // namespace lagr
