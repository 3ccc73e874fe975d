#pragma once

// Hamiltonian group actions on C^N and CP^{N-1}.
//
// Every registered action is linear: a group element g acts through the
// ambient operator `representation(g)`, and a Lie algebra element xi
// through `derived(xi)`. A moment map value is stored as the coordinates
// <Phi, xi_k> against the action's Lie algebra basis, and the sign
// convention for all four actions is
//
//     d<Phi, xi>(v) = omega(xi_M, v),   omega(u, v) = Im <u, v>,
//
// with omega the Fubini-Study form for projective actions.
//
// Registered actions (registry names in quotes):
//   "torus"     T^n on CP^n, (l_1..l_n).[z_0:..:z_n] = [z_0 : l_1^{-1} z_1 : ..],
//               Phi_k = |z_k|^2 / (2 |z|^2), basis xi_k = i E_kk.
//   "su2-cubic" SU(2) on binary cubics p(x, y) -> p((x, y) A), projectivized.
//               Coordinates are taken in the SU(2)-invariant orthonormal
//               monomial basis x^{3-k} y^k / sqrt(C(3,k)); the binomial
//               weights are 1 at both ends, so x^3 + y^3 is (1, 0, 0, 1).
//               Dual coordinates are (mu_real, Re mu_c, Im mu_c) with
//                 mu_real = 3/2|u0|^2 + 1/2|u1|^2 - 1/2|u2|^2 - 3/2|u3|^2
//                 mu_c    = sqrt3 u0 conj(u1) + 2 u1 conj(u2) + sqrt3 u2 conj(u3)
//               against basis diag(-i, i), [[0,-i],[-i,0]], [[0,1],[-1,0]].
//   "sun"       SU(n) on n x n matrices by left multiplication, projectivized.
//               Phi(Z) = (i/2) Z Z^* + (1/2i) I, paired as Re tr(Phi xi).
//   "circle"    S^1 on C^{n+1} by scalar multiplication (not projectivized),
//               Phi(z) = -|z|^2 / 2 + 1/2, basis xi = i.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lagr/config.hpp"
#include "lagr/geometry.hpp"

namespace lagr {

struct DualVector {
  RealVector coords;

  int dim() const { return static_cast<int>(coords.size()); }
  double norm() const { return coords.norm(); }
};

class GroupMembershipError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LieAlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct HamiltonianAction {
  std::string name;
  int param = 0;           // n in the registry key
  int group_dim = 0;       // real dimension of the group
  int ambient_dim = 0;     // complex dimension of the ambient vector space
  bool projective = false;
  bool abelian = false;
  int matrix_size = 0;     // size of the defining representation
  std::vector<ComplexMatrix> lie_basis;

  // Group membership in the defining representation.
  std::function<bool(const ComplexMatrix&, double)> contains;
  std::function<ComplexMatrix(const ComplexMatrix&)> representation;
  std::function<ComplexMatrix(const ComplexMatrix&)> derived;
  // Moment map formula. Projective actions receive a unit vector.
  std::function<RealVector(const ComplexVector&)> moment_formula;
  std::function<ComplexMatrix(std::mt19937_64&)> random_element;
};

// Registry lookup by name ("torus", "su2-cubic", "sun", "circle").
HamiltonianAction make_action(const std::string& name, int n = 0);

HamiltonianAction torus_cpn(int n);
HamiltonianAction su2_cubic();
HamiltonianAction sun_matrices(int n);
HamiltonianAction circle_cn(int n);

ComplexMatrix identity_element(const HamiltonianAction& a);

// Throws GroupMembershipError when g is not in the group within tolerance.
void require_group_element(const HamiltonianAction& a, const ComplexMatrix& g,
                           double tol = default_tolerances().group_membership);

ComplexVector act(const HamiltonianAction& a, const ComplexMatrix& g, const ComplexVector& v);
ProjectivePoint act(const HamiltonianAction& a, const ComplexMatrix& g, const ProjectivePoint& p);

// Coordinates of xi in the real span of the Lie basis; throws LieAlgebraError
// when the least-squares residual exceeds tolerance.
RealVector lie_coordinates(const HamiltonianAction& a, const ComplexMatrix& xi,
                           double tol = default_tolerances().lie_algebra);

ComplexMatrix lie_element(const HamiltonianAction& a, const RealVector& coords);

// d/dt|_0 act(exp(t xi), p), computed as derived(xi) * p.
ComplexVector infinitesimal(const HamiltonianAction& a, const ComplexMatrix& xi,
                            const ComplexVector& v);
TangentVector infinitesimal(const HamiltonianAction& a, const ComplexMatrix& xi,
                            const ProjectivePoint& p);

// Moment map; projective actions evaluate at the unit representative.
DualVector moment(const HamiltonianAction& a, const ComplexVector& v);
DualVector moment(const HamiltonianAction& a, const ProjectivePoint& p);

// Ad*_g: <coadjoint(g, mu), xi_k> = <mu, g^{-1} xi_k g>.
DualVector coadjoint(const HamiltonianAction& a, const ComplexMatrix& g, const DualVector& mu);

// True when mu pairs to zero with every bracket [xi_k, xi_l], i.e. mu is
// fixed by the coadjoint action of the identity component.
bool is_coadjoint_fixed(const HamiltonianAction& a, const DualVector& mu, double tol);

// Symplectic form of the action's manifold at p applied to two ambient lifts.
double action_omega(const HamiltonianAction& a, const ComplexVector& p, const ComplexVector& u,
                    const ComplexVector& v);

// max over `trials` random directions v of
//   | (<Phi(p + h v), xi> - <Phi(p - h v), xi>) / 2h - omega(xi_M(p), v) |
// with h = 1e-5 |p|.
double check_hamilton_identity(const HamiltonianAction& a, const ComplexVector& p,
                               const ComplexMatrix& xi, int trials, std::mt19937_64& rng);

// | moment(act(g, p)) - coadjoint(g, moment(p)) |
double check_equivariance(const HamiltonianAction& a, const ComplexMatrix& g,
                          const ComplexVector& p);

// Residuals of the two scalar equations cutting out the su2-cubic zero set
// at the unit representative of u:
//   3|u0|^2 + |u1|^2 - |u2|^2 - 3|u3|^2            (real)
//   |sqrt3 u0 conj(u1) + 2 u1 conj(u2) + sqrt3 u2 conj(u3)|
struct CubicZeroSetResiduals {
  double weight_equation = 0.0;
  double raising_equation = 0.0;
};
CubicZeroSetResiduals cubic_zero_set_residuals(const ComplexVector& u);

// The same pair with unit coefficients in the complex equation,
// u0 conj(u1) + u1 conj(u2) + u2 conj(u3). This form agrees with the
// weighted one at (1, 0, 0, 1) but is not SU(2)-invariant.
CubicZeroSetResiduals cubic_zero_set_residuals_unweighted(const ComplexVector& u);

// Conversions between raw monomial coefficients c_k of
// sum c_k x^{3-k} y^k and the orthonormal coordinates used by su2-cubic.
ComplexVector cubic_from_monomial_coefficients(const ComplexVector& c);
ComplexVector cubic_to_monomial_coefficients(const ComplexVector& u);

// Ambient operator of p(x, y) -> p((x, y) A) on raw monomial coefficients
// of binary forms of the given degree.
ComplexMatrix binary_form_substitution(const ComplexMatrix& a, int degree);

// Flattening of n x n matrices (column-major) used by the sun action.
ComplexVector flatten(const ComplexMatrix& z);
ComplexMatrix unflatten(const ComplexVector& v, int n);

}  // namespace lagr
