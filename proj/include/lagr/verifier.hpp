#pragma once

#include <string>
#include <vector>

#include "lagr/actions.hpp"
#include "lagr/optimizer.hpp"

namespace lagr {

// Raised by isotropy_check when the point's moment value is not fixed by
// the coadjoint action, so the isotropy argument does not apply.
class LevelSetError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct LagrangianVerdict {
  int orbit_dim = 0;
  int half_dim = 0;
  double max_omega_residual = 0.0;
  bool in_fixed_level = false;
  bool isotropic = false;
  bool lagrangian = false;
  ComplexVector point;
};

// Induced vector fields xi_k(p) for the Lie basis, at the unit representative
// of p; for projective actions the lifts are projected horizontally.
std::vector<TangentVector> orbit_tangent_basis(const HamiltonianAction& a, const ProjectivePoint& p);

int orbit_dimension(const HamiltonianAction& a, const ProjectivePoint& p,
                    double rank_threshold = default_tolerances().rank_threshold);

// Real dimension of the stabilizer Lie algebra: kernel of
// theta -> sum theta_k xi_k(p).
int stabilizer_algebra_dimension(const HamiltonianAction& a, const ProjectivePoint& p,
                                 double rank_threshold = default_tolerances().rank_threshold);

// max |omega(xi_k(p), xi_l(p))| over Lie-basis pairs. Throws LevelSetError
// when moment(p) is not coadjoint-fixed within `level_tol`.
double isotropy_check(const HamiltonianAction& a, const ProjectivePoint& p,
                      double level_tol = default_tolerances().zero_level);

// Half of the real dimension of the ambient manifold: complex dimension of
// CP^{N-1} for projective actions, N for linear ones.
int half_dimension(const HamiltonianAction& a);

// Never throws for a point off the level set; the verdict records it instead.
LagrangianVerdict lagrangian_verdict(const HamiltonianAction& a, const ProjectivePoint& p,
                                     const Tolerances& tol = default_tolerances());

struct ZeroLevelMembership {
  bool member = false;
  double residual = 0.0;
  // su2-cubic only: max of the two scalar equation residuals.
  double equation_residual = 0.0;
};

ZeroLevelMembership zero_level_membership(const HamiltonianAction& a, const ProjectivePoint& p,
                                          double tol = default_tolerances().zero_level);

struct QuaternionSpanCheck {
  std::string label;
  ComplexMatrix matrix;
  Complex scalar;          // matrix = scalar * element
  ComplexMatrix element;   // in SU(2)
  double residual = 0.0;   // max of unitarity, determinant and reconstruction defects
  bool pass = false;
};

struct QuaternionSpanReport {
  std::vector<QuaternionSpanCheck> matrices;
  int span_rank = 0;
  bool span_rank_pass = false;
  std::vector<double> orbit_distances;
  double max_orbit_distance = 0.0;
  bool orbit_pass = false;
  bool pass = false;
};

// The real span of diag(1,-1), iI, [[0,1],[1,0]], [[0,i],[-i,0]] against
// the SU(2) orbit of [I] in CP^3.
std::vector<ComplexMatrix> quaternion_span_matrices();

QuaternionSpanReport verify_quaternion_span(int combinations = 50, std::uint64_t seed = 42,
                                            const Tolerances& tol = default_tolerances());

}  // namespace lagr
