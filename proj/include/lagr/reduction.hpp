#pragma once

// Symplectic reduction of the circle action on C^{n+1}: Z = S^{2n+1}
// embeds as (inclusion, projection) into C^{n+1} x CP^n, and the pullback
// of omega - omega_red along that embedding vanishes. Reduced tangent
// vectors are carried as horizontal lifts at a point of Z, so the reduced
// form is defined by pi^* omega_red = i^* omega rather than by a
// Fubini-Study normalization. The circle acts freely on Z.

#include <cstdint>

#include "lagr/actions.hpp"

namespace lagr {

class HorizontalityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tangent vector to M_red at pi(base), lifted horizontally to base in Z.
struct ReducedTangent {
  ComplexVector base;
  ComplexVector lift;
};

// Horizontal lift of a tangent vector t of Z at z: t - <z, t> z.
ReducedTangent horizontal_lift(const ComplexVector& z, const ComplexVector& t);

// omega_std(v.lift, w.lift). Throws HorizontalityError unless |z| = 1 and
// both lifts are Hermitian-orthogonal to z (within `tol`).
double reduced_omega(const ComplexVector& z, const ReducedTangent& v, const ReducedTangent& w,
                     double tol = default_tolerances().horizontality);

struct AlpEmbeddingCheck {
  int n = 0;
  int samples = 0;
  double max_residual = 0.0;
  // Real dimensions.
  int dim_m = 0;
  int dim_g = 0;
  int dim_z = 0;
  int dim_m_red = 0;
  int dim_product = 0;
  // Numerical ranks of the tangent spaces of Z and of the horizontal space.
  int measured_dim_z = 0;
  int measured_dim_m_red = 0;
  bool dimension_identity = false;   // dim Z = dim M - dim G = dim(M x M_red) / 2
};

// (phi^* (omega - omega_red))(t1, t2) at z in Z for tangent vectors t1, t2 of Z.
double alp_pullback(const ComplexVector& z, const ComplexVector& t1, const ComplexVector& t2);

// max over samples of |omega_std(t1, t2) - reduced_omega(z, h(t1), h(t2))| for
// random z on S^{2n+1} and random tangent vectors t1, t2 of Z.
// `base_perturbation` > 0 projects against a base point tilted by that
// amount instead of z, to show the residual responds linearly to
// projection errors.
AlpEmbeddingCheck verify_alp_embedding(int n, int samples, std::uint64_t seed = 42,
                                       double base_perturbation = 0.0);

// Phi'(m, mu) = Phi(m) - mu.
DualVector shifted_moment(const HamiltonianAction& a, const ComplexVector& m, const DualVector& mu);

}  // namespace lagr
