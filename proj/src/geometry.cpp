#include "lagr/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace lagr {

namespace {

void require_same_dim(const ComplexVector& u, const ComplexVector& v, const char* what) {
  if (u.size() != v.size()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(u.size()) + " vs " + std::to_string(v.size()) + ")");
  }
}

}  // namespace

ProjectivePoint::ProjectivePoint(ComplexVector rep) : rep_(std::move(rep)) {
  if (rep_.size() == 0) throw std::invalid_argument("ProjectivePoint: empty representative");
  if (!rep_.allFinite()) throw std::invalid_argument("ProjectivePoint: non-finite representative");
  if (rep_.norm() == 0.0) throw std::invalid_argument("ProjectivePoint: zero representative");
}

Complex hermitian_inner(const ComplexVector& u, const ComplexVector& v) {
  require_same_dim(u, v, "hermitian_inner");
  // Eigen's dot() conjugates the first argument.
  return u.dot(v);
}

double omega_std(const ComplexVector& u, const ComplexVector& v) {
  require_same_dim(u, v, "omega_std");
  return u.dot(v).imag();
}

ComplexVector horizontal_projection(const ComplexVector& rep, const ComplexVector& v) {
  require_same_dim(rep, v, "horizontal_projection");
  const double n2 = rep.squaredNorm();
  if (n2 == 0.0) throw std::invalid_argument("horizontal_projection: zero representative");
  return v - rep * (rep.dot(v) / n2);
}

double fs_omega(const ProjectivePoint& p, const TangentVector& v, const TangentVector& w) {
  const ComplexVector& rep = p.rep();
  require_same_dim(rep, v.lift, "fs_omega");
  require_same_dim(rep, w.lift, "fs_omega");
  if (v.base.dim() != p.dim() || w.base.dim() != p.dim()) {
    throw std::invalid_argument("fs_omega: tangent vectors based in a different space");
  }
  const ComplexVector vh = horizontal_projection(rep, v.lift);
  const ComplexVector wh = horizontal_projection(rep, w.lift);
  return vh.dot(wh).imag() / rep.squaredNorm();
}

double projective_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("projective_distance: dimension mismatch");
  const ComplexVector a = p.unit_rep();
  const ComplexVector b = q.unit_rep();
  const Complex overlap = a.dot(b);
  const double perp = (b - a * overlap).norm();
  return std::atan2(perp, std::abs(overlap));
}

ComplexMatrix matrix_exp(const ComplexMatrix& x, double t) {
  if (x.rows() != x.cols()) throw std::invalid_argument("matrix_exp: matrix is not square");
  const Eigen::Index n = x.rows();
  ComplexMatrix a = x * t;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    a /= std::ldexp(1.0, squarings);
  }
  // ||a|| <= 1/2, so 24 terms are far below double rounding.
  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= 24; ++k) {
    term = term * a / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

RealMatrix realify(std::span<const ComplexVector> vectors) {
  if (vectors.empty()) return RealMatrix(0, 0);
  const Eigen::Index dim = vectors.front().size();
  RealMatrix m(2 * dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != dim) throw std::invalid_argument("realify: dimension mismatch");
    m.col(static_cast<Eigen::Index>(k)) << vectors[k].real(), vectors[k].imag();
  }
  return m;
}

int numeric_rank(std::span<const ComplexVector> vectors, double threshold) {
  if (vectors.empty()) throw std::invalid_argument("numeric_rank: empty vector list");
  const RealMatrix m = realify(vectors);
  Eigen::JacobiSVD<RealMatrix> svd(m);
  const RealVector& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = threshold * s(0);
  return static_cast<int>((s.array() > cutoff).count());
}

ComplexVector random_unit_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

ComplexMatrix random_special_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  const Complex det = q.determinant();
  q *= std::polar(1.0, -std::arg(det) / n);
  return q;
}

bool is_unitary(const ComplexMatrix& g, double tol) {
  if (g.rows() != g.cols()) return false;
  const ComplexMatrix defect = g.adjoint() * g - ComplexMatrix::Identity(g.rows(), g.cols());
  return defect.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace lagr
