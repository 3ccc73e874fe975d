#pragma once

namespace lagr {

// Every floating-point threshold used by the toolkit lives here so that
// reports can quote the value a check was run against.
struct Tolerances {
  // Unitarity and determinant checks on group elements.
  double group_membership = 1e-10;
  // Least-squares residual when expressing a matrix in a Lie algebra basis.
  double lie_algebra = 1e-10;
  // Relative singular-value cutoff for numeric_rank.
  double rank_threshold = 1e-8;
  // ||moment|| at the unit representative below this counts as on the level.
  double zero_level = 1e-10;
  double isotropy = 1e-9;
  double hamilton = 1e-6;
  double equivariance = 1e-9;
  double stabilizer_condition = 1e-10;
  double closure_dedup = 1e-9;
  double search_cluster = 1e-6;
  double relation = 1e-12;
  double orbit_membership = 1e-6;
  double quaternion_scalar = 1e-12;
  double quaternion_orbit = 1e-9;
  double horizontality = 1e-12;
  double alp_residual = 1e-8;
  double zero_objective = 1e-16;
};

const Tolerances& default_tolerances();

}  // namespace lagr
