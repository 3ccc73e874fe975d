#include "lagr/verifier.hpp"

#include <algorithm>
#include <cmath>

namespace lagr {

std::vector<TangentVector> orbit_tangent_basis(const HamiltonianAction& a, const ProjectivePoint& p) {
  if (p.dim() != a.ambient_dim) throw std::invalid_argument("orbit_tangent_basis: dimension mismatch");
  const ProjectivePoint base(p.unit_rep());
  std::vector<TangentVector> out;
  out.reserve(a.lie_basis.size());
  for (const auto& xi : a.lie_basis) {
    ComplexVector lift = a.derived(xi) * base.rep();
    if (a.projective) lift = horizontal_projection(base.rep(), lift);
    out.push_back(TangentVector{base, std::move(lift)});
  }
  return out;
}

namespace {

std::vector<ComplexVector> lifts_of(const std::vector<TangentVector>& basis) {
  std::vector<ComplexVector> lifts;
  lifts.reserve(basis.size());
  for (const auto& t : basis) lifts.push_back(t.lift);
  return lifts;
}

}  // namespace

int orbit_dimension(const HamiltonianAction& a, const ProjectivePoint& p, double rank_threshold) {
  const auto lifts = lifts_of(orbit_tangent_basis(a, p));
  return numeric_rank(lifts, rank_threshold);
}

int stabilizer_algebra_dimension(const HamiltonianAction& a, const ProjectivePoint& p,
                                 double rank_threshold) {
  const auto lifts = lifts_of(orbit_tangent_basis(a, p));
  const RealMatrix m = realify(lifts);
  if (m.cwiseAbs().maxCoeff() == 0.0) return a.group_dim;
  Eigen::FullPivLU<RealMatrix> lu(m);
  lu.setThreshold(rank_threshold);
  return static_cast<int>(lu.dimensionOfKernel());
}

namespace {

double max_pairing(const HamiltonianAction& a, const ProjectivePoint& p) {
  const auto basis = orbit_tangent_basis(a, p);
  const ComplexVector& rep = basis.front().base.rep();
  double worst = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t l = k + 1; l < basis.size(); ++l) {
      worst = std::max(worst, std::abs(action_omega(a, rep, basis[k].lift, basis[l].lift)));
    }
  }
  return worst;
}

}  // namespace

double isotropy_check(const HamiltonianAction& a, const ProjectivePoint& p, double level_tol) {
  const DualVector mu = moment(a, p);
  if (!is_coadjoint_fixed(a, mu, level_tol)) {
    throw LevelSetError("isotropy_check: moment value is not fixed by the coadjoint action (|mu| = " +
                        std::to_string(mu.norm()) + ")");
  }
  return max_pairing(a, p);
}

int half_dimension(const HamiltonianAction& a) {
  return a.projective ? a.ambient_dim - 1 : a.ambient_dim;
}

LagrangianVerdict lagrangian_verdict(const HamiltonianAction& a, const ProjectivePoint& p,
                                     const Tolerances& tol) {
  LagrangianVerdict v;
  v.point = p.unit_rep();
  v.in_fixed_level = is_coadjoint_fixed(a, moment(a, p), tol.zero_level);
  v.max_omega_residual = max_pairing(a, p);
  v.orbit_dim = orbit_dimension(a, p, tol.rank_threshold);
  v.half_dim = half_dimension(a);
  v.isotropic = v.max_omega_residual < tol.isotropy;
  v.lagrangian = v.in_fixed_level && v.isotropic && v.orbit_dim == v.half_dim;
  return v;
}

ZeroLevelMembership zero_level_membership(const HamiltonianAction& a, const ProjectivePoint& p,
                                          double tol) {
  ZeroLevelMembership z;
  z.residual = moment(a, p.unit_rep()).norm();
  z.member = z.residual < tol;
  if (a.name == "su2-cubic") {
    const auto eq = cubic_zero_set_residuals(p.rep());
    z.equation_residual = std::max(eq.weight_equation, eq.raising_equation);
  }
  return z;
}

std::vector<ComplexMatrix> quaternion_span_matrices() {
  ComplexMatrix m1(2, 2), m2(2, 2), m3(2, 2), m4(2, 2);
  m1 << 1.0, 0.0, 0.0, -1.0;
  m2 << kI, 0.0, 0.0, kI;
  m3 << 0.0, 1.0, 1.0, 0.0;
  m4 << 0.0, kI, -kI, 0.0;
  return {m1, m2, m3, m4};
}

QuaternionSpanReport verify_quaternion_span(int combinations, std::uint64_t seed, const Tolerances& tol) {
  QuaternionSpanReport report;
  const auto mats = quaternion_span_matrices();
  const char* labels[] = {"diag(1,-1)", "iI", "[[0,1],[1,0]]", "[[0,i],[-i,0]]"};

  std::vector<ComplexVector> flat;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    QuaternionSpanCheck c;
    c.label = labels[k];
    c.matrix = mats[k];
    // det(lambda g) = lambda^2 for g in SU(2).
    c.scalar = std::sqrt(mats[k].determinant());
    c.element = mats[k] / c.scalar;
    const double unitary_defect =
        (c.element.adjoint() * c.element - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff();
    const double det_defect = std::abs(c.element.determinant() - Complex(1.0, 0.0));
    const double scalar_defect = std::abs(std::abs(c.scalar) - 1.0);
    const double rebuild_defect = (c.scalar * c.element - c.matrix).cwiseAbs().maxCoeff();
    c.residual = std::max({unitary_defect, det_defect, scalar_defect, rebuild_defect});
    c.pass = c.residual <= tol.quaternion_scalar;
    report.matrices.push_back(c);
    flat.push_back(flatten(mats[k]));
  }
  report.span_rank = numeric_rank(flat, tol.rank_threshold);
  report.span_rank_pass = report.span_rank == 4;

  const HamiltonianAction sun2 = sun_matrices(2);
  const ProjectivePoint base(flatten(ComplexMatrix::Identity(2, 2)));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  DescentParams params;
  params.seed = seed;
  for (int c = 0; c < combinations; ++c) {
    RealVector t(4);
    for (int k = 0; k < 4; ++k) t(k) = normal(rng);
    t /= t.norm();
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    for (int k = 0; k < 4; ++k) m += t(k) * mats[static_cast<std::size_t>(k)];
    const double d = orbit_membership(sun2, base, ProjectivePoint(flatten(m)), params, 4);
    report.orbit_distances.push_back(d);
    report.max_orbit_distance = std::max(report.max_orbit_distance, d);
  }
  report.orbit_pass = report.max_orbit_distance <= tol.quaternion_orbit;

  report.pass = report.span_rank_pass && report.orbit_pass &&
                std::all_of(report.matrices.begin(), report.matrices.end(),
                            [](const QuaternionSpanCheck& c) { return c.pass; });
  return report;
}

}  // namespace lagr
