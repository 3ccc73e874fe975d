#pragma once

// Riemannian descent of ||Phi||^2 on the unit sphere (or on CP^{N-1} for
// projective actions), and orbit membership by Gauss-Newton over the group
// in exponential coordinates.

#include <cstdint>
#include <vector>

#include "lagr/actions.hpp"

namespace lagr {

struct DescentParams {
  int max_iters = 5000;
  double grad_tol = 1e-10;
  double step_init = 1.0;
  double armijo_c = 1e-4;
  double backtrack_ratio = 0.5;
  std::uint64_t seed = 42;

  // Throws std::invalid_argument unless every field is in range.
  void validate() const;
};

struct DescentResult {
  ComplexVector point;
  double objective = 0.0;
  double grad_norm = 0.0;
  int iters = 0;
  bool converged = false;
};

// f(z) = ||moment(a, z)||^2.
double moment_norm_squared(const HamiltonianAction& a, const ComplexVector& z);

// Riemannian gradient of moment_norm_squared at unit z: central differences
// (step 1e-6, one Richardson refinement) with the radial component removed,
// and the phase direction i z removed for projective actions.
ComplexVector moment_norm_gradient(const HamiltonianAction& a, const ComplexVector& z);

// Projected gradient descent with Armijo backtracking and renormalization
// as the retraction. Non-convergence is reported through `converged`.
DescentResult minimize_moment_norm(const HamiltonianAction& a, const ComplexVector& start,
                                   const DescentParams& params = {});

// Start i is drawn uniformly from the unit sphere using seed_seq{seed, i}.
ComplexVector seeded_start(const HamiltonianAction& a, std::uint64_t seed, int index);

struct OrbitAlignment {
  ComplexMatrix element;   // g with act(g, base) closest to q found
  double distance = 0.0;   // projective_distance(act(g, base), q)
  int iters = 0;
};

// Local Gauss-Newton descent of sin^2 of the projective distance over the
// group, updating g <- exp(sum delta_k xi_k) g.
OrbitAlignment align_in_orbit(const HamiltonianAction& a, const ProjectivePoint& base,
                              const ProjectivePoint& q, const ComplexMatrix& start,
                              int max_iters = 200);

// Best alignment over `starts` starting elements: the identity, then
// random group elements drawn from params.seed.
OrbitAlignment best_orbit_alignment(const HamiltonianAction& a, const ProjectivePoint& base,
                                    const ProjectivePoint& q, const DescentParams& params,
                                    int starts);

double orbit_membership(const HamiltonianAction& a, const ProjectivePoint& base,
                        const ProjectivePoint& q, const DescentParams& params = {},
                        int starts = 20);

}  // namespace lagr
