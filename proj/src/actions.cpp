#include "lagr/actions.hpp"

#include <cmath>
#include <numbers>

namespace lagr {

namespace {

constexpr int kCubicDegree = 3;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ComplexMatrix block_diagonal_copies(const ComplexMatrix& g, int copies) {
  const Eigen::Index m = g.rows();
  ComplexMatrix out = ComplexMatrix::Zero(m * copies, m * copies);
  for (int c = 0; c < copies; ++c) out.block(c * m, c * m, m, m) = g;
  return out;
}

bool is_special_unitary(const ComplexMatrix& g, int n, double tol) {
  if (g.rows() != n || g.cols() != n) return false;
  if (!g.allFinite() || !is_unitary(g, tol)) return false;
  return std::abs(g.determinant() - Complex(1.0, 0.0)) <= tol;
}

// Orthonormal rescaling u_k = c_k / sqrt(C(3,k)).
RealVector cubic_weights() {
  RealVector w(kCubicDegree + 1);
  for (int k = 0; k <= kCubicDegree; ++k) w(k) = std::sqrt(binomial(kCubicDegree, k));
  return w;
}

// Derivation xi acting on raw coefficients of degree-d binary forms:
// d/ds p((x, y)(I + s xi)) at s = 0.
ComplexMatrix binary_form_derivation(const ComplexMatrix& xi, int degree) {
  ComplexMatrix d = ComplexMatrix::Zero(degree + 1, degree + 1);
  for (int k = 0; k <= degree; ++k) {
    d(k, k) += xi(0, 0) * static_cast<double>(degree - k) + xi(1, 1) * static_cast<double>(k);
    if (k + 1 <= degree) d(k + 1, k) += xi(1, 0) * static_cast<double>(degree - k);
    if (k >= 1) d(k - 1, k) += xi(0, 1) * static_cast<double>(k);
  }
  return d;
}

ComplexMatrix to_orthonormal(const ComplexMatrix& raw) {
  const RealVector w = cubic_weights();
  return w.cwiseInverse().asDiagonal() * raw * w.asDiagonal();
}

std::vector<ComplexMatrix> su_n_basis(int n) {
  std::vector<ComplexMatrix> basis;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix real_part = ComplexMatrix::Zero(n, n);
      real_part(j, k) = 1.0;
      real_part(k, j) = -1.0;
      basis.push_back(real_part);
      ComplexMatrix imag_part = ComplexMatrix::Zero(n, n);
      imag_part(j, k) = kI;
      imag_part(k, j) = kI;
      basis.push_back(imag_part);
    }
  }
  for (int j = 0; j + 1 < n; ++j) {
    ComplexMatrix diag = ComplexMatrix::Zero(n, n);
    diag(j, j) = kI;
    diag(j + 1, j + 1) = -kI;
    basis.push_back(diag);
  }
  return basis;
}

}  // namespace

ComplexMatrix binary_form_substitution(const ComplexMatrix& a, int degree) {
  if (a.rows() != 2 || a.cols() != 2) throw std::invalid_argument("binary_form_substitution: need 2x2");
  // Column k: coefficients in y of (a00 + a10 y)^{d-k} (a01 + a11 y)^k.
  ComplexMatrix r = ComplexMatrix::Zero(degree + 1, degree + 1);
  for (int k = 0; k <= degree; ++k) {
    std::vector<Complex> poly{Complex(1.0, 0.0)};
    auto multiply = [&poly](Complex c0, Complex c1) {
      std::vector<Complex> next(poly.size() + 1, Complex(0.0, 0.0));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i] * c0;
        next[i + 1] += poly[i] * c1;
      }
      poly = std::move(next);
    };
    for (int i = 0; i < degree - k; ++i) multiply(a(0, 0), a(1, 0));
    for (int i = 0; i < k; ++i) multiply(a(0, 1), a(1, 1));
    for (int j = 0; j <= degree; ++j) r(j, k) = poly[static_cast<std::size_t>(j)];
  }
  return r;
}

ComplexVector cubic_from_monomial_coefficients(const ComplexVector& c) {
  if (c.size() != kCubicDegree + 1) throw std::invalid_argument("cubic coefficients: need 4 entries");
  return c.cwiseQuotient(cubic_weights().cast<Complex>());
}

ComplexVector cubic_to_monomial_coefficients(const ComplexVector& u) {
  if (u.size() != kCubicDegree + 1) throw std::invalid_argument("cubic coordinates: need 4 entries");
  return u.cwiseProduct(cubic_weights().cast<Complex>());
}

ComplexVector flatten(const ComplexMatrix& z) {
  return Eigen::Map<const ComplexVector>(z.data(), z.size());
}

ComplexMatrix unflatten(const ComplexVector& v, int n) {
  if (v.size() != static_cast<Eigen::Index>(n) * n) throw std::invalid_argument("unflatten: size mismatch");
  return Eigen::Map<const ComplexMatrix>(v.data(), n, n);
}

HamiltonianAction torus_cpn(int n) {
  if (n < 1) throw std::invalid_argument("torus: n must be >= 1");
  HamiltonianAction a;
  a.name = "torus";
  a.param = n;
  a.group_dim = n;
  a.ambient_dim = n + 1;
  a.projective = true;
  a.abelian = true;
  a.matrix_size = n;
  for (int k = 0; k < n; ++k) {
    ComplexMatrix xi = ComplexMatrix::Zero(n, n);
    xi(k, k) = kI;
    a.lie_basis.push_back(xi);
  }
  a.contains = [n](const ComplexMatrix& g, double tol) {
    if (g.rows() != n || g.cols() != n || !g.allFinite()) return false;
    ComplexMatrix off = g;
    off.diagonal().setZero();
    return off.cwiseAbs().maxCoeff() <= tol && is_unitary(g, tol);
  };
  a.representation = [n](const ComplexMatrix& g) {
    ComplexMatrix r = ComplexMatrix::Identity(n + 1, n + 1);
    for (int k = 0; k < n; ++k) r(k + 1, k + 1) = std::conj(g(k, k));
    return r;
  };
  a.derived = [n](const ComplexMatrix& xi) {
    ComplexMatrix r = ComplexMatrix::Zero(n + 1, n + 1);
    for (int k = 0; k < n; ++k) r(k + 1, k + 1) = std::conj(xi(k, k));
    return r;
  };
  a.moment_formula = [n](const ComplexVector& z) {
    const double norm2 = z.squaredNorm();
    RealVector mu(n);
    for (int k = 0; k < n; ++k) mu(k) = 0.5 * std::norm(z(k + 1)) / norm2;
    return mu;
  };
  a.random_element = [n](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    ComplexMatrix g = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) g(k, k) = std::polar(1.0, angle(rng));
    return g;
  };
  return a;
}

HamiltonianAction su2_cubic() {
  HamiltonianAction a;
  a.name = "su2-cubic";
  a.param = 0;
  a.group_dim = 3;
  a.ambient_dim = kCubicDegree + 1;
  a.projective = true;
  a.abelian = false;
  a.matrix_size = 2;
  ComplexMatrix weight(2, 2), raise_real(2, 2), raise_imag(2, 2);
  weight << -kI, 0.0, 0.0, kI;
  raise_real << 0.0, -kI, -kI, 0.0;
  raise_imag << 0.0, 1.0, -1.0, 0.0;
  a.lie_basis = {weight, raise_real, raise_imag};
  a.contains = [](const ComplexMatrix& g, double tol) { return is_special_unitary(g, 2, tol); };
  a.representation = [](const ComplexMatrix& g) {
    return to_orthonormal(binary_form_substitution(g, kCubicDegree));
  };
  a.derived = [](const ComplexMatrix& xi) {
    return to_orthonormal(binary_form_derivation(xi, kCubicDegree));
  };
  a.moment_formula = [](const ComplexVector& u) {
    const double s3 = std::sqrt(3.0);
    const double real_part = 1.5 * std::norm(u(0)) + 0.5 * std::norm(u(1)) -
                             0.5 * std::norm(u(2)) - 1.5 * std::norm(u(3));
    const Complex raising = s3 * u(0) * std::conj(u(1)) + 2.0 * u(1) * std::conj(u(2)) +
                            s3 * u(2) * std::conj(u(3));
    RealVector mu(3);
    mu << real_part, raising.real(), raising.imag();
    return mu;
  };
  a.random_element = [](std::mt19937_64& rng) { return random_special_unitary(2, rng); };
  return a;
}

HamiltonianAction sun_matrices(int n) {
  if (n < 2) throw std::invalid_argument("sun: n must be >= 2");
  HamiltonianAction a;
  a.name = "sun";
  a.param = n;
  a.group_dim = n * n - 1;
  a.ambient_dim = n * n;
  a.projective = true;
  a.abelian = false;
  a.matrix_size = n;
  a.lie_basis = su_n_basis(n);
  a.contains = [n](const ComplexMatrix& g, double tol) { return is_special_unitary(g, n, tol); };
  a.representation = [n](const ComplexMatrix& g) { return block_diagonal_copies(g, n); };
  a.derived = [n](const ComplexMatrix& xi) { return block_diagonal_copies(xi, n); };
  const std::vector<ComplexMatrix> basis = a.lie_basis;
  a.moment_formula = [n, basis](const ComplexVector& v) {
    const ComplexMatrix z = unflatten(v, n);
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const ComplexMatrix mu = (kI / 2.0) * z * z.adjoint() + id / (2.0 * kI);
    RealVector coords(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      coords(static_cast<Eigen::Index>(k)) = (mu * basis[k]).trace().real();
    }
    return coords;
  };
  a.random_element = [n](std::mt19937_64& rng) { return random_special_unitary(n, rng); };
  return a;
}

HamiltonianAction circle_cn(int n) {
  if (n < 0) throw std::invalid_argument("circle: n must be >= 0");
  HamiltonianAction a;
  a.name = "circle";
  a.param = n;
  a.group_dim = 1;
  a.ambient_dim = n + 1;
  a.projective = false;
  a.abelian = true;
  a.matrix_size = 1;
  ComplexMatrix xi(1, 1);
  xi(0, 0) = kI;
  a.lie_basis = {xi};
  a.contains = [](const ComplexMatrix& g, double tol) {
    return g.rows() == 1 && g.cols() == 1 && std::isfinite(std::abs(g(0, 0))) &&
           std::abs(std::abs(g(0, 0)) - 1.0) <= tol;
  };
  a.representation = [n](const ComplexMatrix& g) {
    return ComplexMatrix(g(0, 0) * ComplexMatrix::Identity(n + 1, n + 1));
  };
  a.derived = [n](const ComplexMatrix& x) {
    return ComplexMatrix(x(0, 0) * ComplexMatrix::Identity(n + 1, n + 1));
  };
  a.moment_formula = [](const ComplexVector& z) {
    RealVector mu(1);
    mu(0) = -0.5 * z.squaredNorm() + 0.5;
    return mu;
  };
  a.random_element = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    ComplexMatrix g(1, 1);
    g(0, 0) = std::polar(1.0, angle(rng));
    return g;
  };
  return a;
}

HamiltonianAction make_action(const std::string& name, int n) {
  if (name == "torus") return torus_cpn(n);
  if (name == "su2-cubic") return su2_cubic();
  if (name == "sun") return sun_matrices(n);
  if (name == "circle") return circle_cn(n);
  throw std::invalid_argument("unknown action: " + name);
}

ComplexMatrix identity_element(const HamiltonianAction& a) {
  return ComplexMatrix::Identity(a.matrix_size, a.matrix_size);
}

void require_group_element(const HamiltonianAction& a, const ComplexMatrix& g, double tol) {
  if (!a.contains(g, tol)) {
    throw GroupMembershipError("element is not in the group of action " + a.name);
  }
}

ComplexVector act(const HamiltonianAction& a, const ComplexMatrix& g, const ComplexVector& v) {
  require_group_element(a, g);
  if (v.size() != a.ambient_dim) throw std::invalid_argument("act: ambient dimension mismatch");
  return a.representation(g) * v;
}

ProjectivePoint act(const HamiltonianAction& a, const ComplexMatrix& g, const ProjectivePoint& p) {
  return ProjectivePoint(act(a, g, p.rep()));
}

RealVector lie_coordinates(const HamiltonianAction& a, const ComplexMatrix& xi, double tol) {
  if (xi.rows() != a.matrix_size || xi.cols() != a.matrix_size) {
    throw LieAlgebraError("lie_coordinates: wrong matrix size for action " + a.name);
  }
  std::vector<ComplexVector> flat;
  flat.reserve(a.lie_basis.size());
  for (const auto& b : a.lie_basis) flat.push_back(flatten(b));
  const RealMatrix basis = realify(flat);
  const ComplexVector target_c = flatten(xi);
  RealVector target(2 * target_c.size());
  target << target_c.real(), target_c.imag();
  const RealVector coords = basis.colPivHouseholderQr().solve(target);
  const double residual = (basis * coords - target).norm();
  if (!(residual <= tol * std::max(1.0, target.norm()))) {
    throw LieAlgebraError("matrix is not in the Lie algebra of action " + a.name);
  }
  return coords;
}

ComplexMatrix lie_element(const HamiltonianAction& a, const RealVector& coords) {
  if (coords.size() != a.group_dim) throw std::invalid_argument("lie_element: coordinate count mismatch");
  ComplexMatrix xi = ComplexMatrix::Zero(a.matrix_size, a.matrix_size);
  for (int k = 0; k < a.group_dim; ++k) xi += coords(k) * a.lie_basis[static_cast<std::size_t>(k)];
  return xi;
}

ComplexVector infinitesimal(const HamiltonianAction& a, const ComplexMatrix& xi,
                            const ComplexVector& v) {
  lie_coordinates(a, xi);
  if (v.size() != a.ambient_dim) throw std::invalid_argument("infinitesimal: ambient dimension mismatch");
  return a.derived(xi) * v;
}

TangentVector infinitesimal(const HamiltonianAction& a, const ComplexMatrix& xi,
                            const ProjectivePoint& p) {
  return TangentVector{p, infinitesimal(a, xi, p.rep())};
}

DualVector moment(const HamiltonianAction& a, const ComplexVector& v) {
  if (v.size() != a.ambient_dim) throw std::invalid_argument("moment: ambient dimension mismatch");
  const double norm = v.norm();
  if (norm == 0.0) throw std::invalid_argument("moment: zero vector");
  if (a.projective) return DualVector{a.moment_formula(v / norm)};
  return DualVector{a.moment_formula(v)};
}

DualVector moment(const HamiltonianAction& a, const ProjectivePoint& p) {
  return moment(a, p.rep());
}

DualVector coadjoint(const HamiltonianAction& a, const ComplexMatrix& g, const DualVector& mu) {
  require_group_element(a, g);
  if (mu.dim() != a.group_dim) throw std::invalid_argument("coadjoint: dual dimension mismatch");
  if (a.abelian) return mu;
  const ComplexMatrix g_inv = g.adjoint();
  RealVector out(a.group_dim);
  for (int k = 0; k < a.group_dim; ++k) {
    const ComplexMatrix conjugated = g_inv * a.lie_basis[static_cast<std::size_t>(k)] * g;
    out(k) = lie_coordinates(a, conjugated, 1e-8).dot(mu.coords);
  }
  return DualVector{out};
}

bool is_coadjoint_fixed(const HamiltonianAction& a, const DualVector& mu, double tol) {
  if (mu.dim() != a.group_dim) throw std::invalid_argument("is_coadjoint_fixed: dual dimension mismatch");
  for (int k = 0; k < a.group_dim; ++k) {
    for (int l = k + 1; l < a.group_dim; ++l) {
      const auto& x = a.lie_basis[static_cast<std::size_t>(k)];
      const auto& y = a.lie_basis[static_cast<std::size_t>(l)];
      const ComplexMatrix bracket = x * y - y * x;
      if (std::abs(lie_coordinates(a, bracket).dot(mu.coords)) > tol) return false;
    }
  }
  return true;
}

double action_omega(const HamiltonianAction& a, const ComplexVector& p, const ComplexVector& u,
                    const ComplexVector& v) {
  if (!a.projective) return omega_std(u, v);
  const ProjectivePoint base(p);
  return fs_omega(base, TangentVector{base, u}, TangentVector{base, v});
}

double check_hamilton_identity(const HamiltonianAction& a, const ComplexVector& p,
                               const ComplexMatrix& xi, int trials, std::mt19937_64& rng) {
  const RealVector pairing = lie_coordinates(a, xi);
  const ComplexVector xi_p = infinitesimal(a, xi, p);
  const double h = 1e-5 * p.norm();
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const ComplexVector v = random_unit_vector(a.ambient_dim, rng);
    const double plus = moment(a, ComplexVector(p + h * v)).coords.dot(pairing);
    const double minus = moment(a, ComplexVector(p - h * v)).coords.dot(pairing);
    const double numeric = (plus - minus) / (2.0 * h);
    const double analytic = action_omega(a, p, xi_p, v);
    worst = std::max(worst, std::abs(numeric - analytic));
  }
  return worst;
}

double check_equivariance(const HamiltonianAction& a, const ComplexMatrix& g, const ComplexVector& p) {
  const DualVector moved = moment(a, act(a, g, p));
  const DualVector transported = coadjoint(a, g, moment(a, p));
  return (moved.coords - transported.coords).norm();
}

CubicZeroSetResiduals cubic_zero_set_residuals(const ComplexVector& u) {
  if (u.size() != 4) throw std::invalid_argument("cubic_zero_set_residuals: need 4 entries");
  const ComplexVector w = u / u.norm();
  const double s3 = std::sqrt(3.0);
  CubicZeroSetResiduals r;
  r.weight_equation = std::abs(3.0 * std::norm(w(0)) + std::norm(w(1)) - std::norm(w(2)) -
                               3.0 * std::norm(w(3)));
  r.raising_equation = std::abs(s3 * w(0) * std::conj(w(1)) + 2.0 * w(1) * std::conj(w(2)) +
                                s3 * w(2) * std::conj(w(3)));
  return r;
}

CubicZeroSetResiduals cubic_zero_set_residuals_unweighted(const ComplexVector& u) {
  if (u.size() != 4) throw std::invalid_argument("cubic_zero_set_residuals: need 4 entries");
  const ComplexVector w = u / u.norm();
  CubicZeroSetResiduals r;
  r.weight_equation = std::abs(3.0 * std::norm(w(0)) + std::norm(w(1)) - std::norm(w(2)) -
                               3.0 * std::norm(w(3)));
  r.raising_equation =
      std::abs(w(0) * std::conj(w(1)) + w(1) * std::conj(w(2)) + w(2) * std::conj(w(3)));
  return r;
}

}  // namespace lagr
