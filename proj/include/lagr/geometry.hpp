#pragma once

// Complex linear algebra shared by every module: the standard symplectic
// form on C^N, the Fubini-Study form on CP^{N-1}, projective distance,
// matrix exponentials and real ranks of complex vector families.
//
// Conventions:
//   <u, v>       = sum conj(u_i) v_i        (conjugate-linear in the first slot)
//   omega(u, v)  = Im <u, v>                (so omega(z, i z) = |z|^2)

#include <complex>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace lagr {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr Complex kI{0.0, 1.0};

// A point of CP^{N-1} stored as a nonzero representative in C^N.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(ComplexVector rep);

  const ComplexVector& rep() const { return rep_; }
  int dim() const { return static_cast<int>(rep_.size()); }
  ComplexVector unit_rep() const { return rep_ / rep_.norm(); }

 private:
  ComplexVector rep_;
};

// Tangent vector to CP^{N-1} at `base`, given by an ambient lift at the
// stored representative of `base`.
struct TangentVector {
  ProjectivePoint base;
  ComplexVector lift;
};

Complex hermitian_inner(const ComplexVector& u, const ComplexVector& v);

double omega_std(const ComplexVector& u, const ComplexVector& v);

// Removes from `v` its component along the complex line of `rep`.
ComplexVector horizontal_projection(const ComplexVector& rep, const ComplexVector& v);

// Fubini-Study form Im<v_h, w_h> / |rep|^2, where v_h and w_h are the
// projections of the lifts orthogonal to the representative. The
// 1/|rep|^2 factor makes the value independent of the representative
// chosen for p (lifts scale with it). Normalization is the one induced
// by reduction of omega_std at the unit sphere.
double fs_omega(const ProjectivePoint& p, const TangentVector& v, const TangentVector& w);

// Angle between the complex lines of p and q, in [0, pi/2]. Evaluated as
// atan2(|q_perp|, |<p,q>|) on unit representatives, which equals
// arccos(|<p,q>|) but keeps full relative precision near zero.
double projective_distance(const ProjectivePoint& p, const ProjectivePoint& q);

// exp(t X) by scaling and squaring with a truncated Taylor series.
ComplexMatrix matrix_exp(const ComplexMatrix& x, double t = 1.0);

// Stacks [Re v; Im v] for each vector as a column of a 2N x k real matrix.
RealMatrix realify(std::span<const ComplexVector> vectors);

// Number of singular values of the real-ified family exceeding
// threshold * (largest singular value). An all-zero family has rank 0.
int numeric_rank(std::span<const ComplexVector> vectors, double threshold = 1e-8);

ComplexVector random_unit_vector(int dim, std::mt19937_64& rng);

// Haar-random element of SU(n).
ComplexMatrix random_special_unitary(int n, std::mt19937_64& rng);

bool is_unitary(const ComplexMatrix& g, double tol);

}  // namespace lagr
