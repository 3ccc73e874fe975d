#include "lagr/stabilizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

#include "lagr/optimizer.hpp"

namespace lagr {

double matrix_distance(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return std::numeric_limits<double>::infinity();
  return (x - y).cwiseAbs().maxCoeff();
}

std::optional<int> FiniteMatrixGroup::find(const ComplexMatrix& m, double tol) const {
  for (int i = 0; i < size(); ++i) {
    if (matrix_distance(elements[static_cast<std::size_t>(i)], m) <= tol) return i;
  }
  return std::nullopt;
}

int FiniteMatrixGroup::inverse(int i) const {
  for (int j = 0; j < size(); ++j) {
    if (table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == identity) return j;
  }
  throw std::logic_error("FiniteMatrixGroup: element without inverse");
}

bool FiniteMatrixGroup::is_abelian() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (table[i][j] != table[j][i]) return false;
    }
  }
  return true;
}

bool FiniteMatrixGroup::is_latin_square() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      const int r = table[i][j];
      const int c = table[j][i];
      if (r < 0 || r >= n || c < 0 || c >= n || row[r] || col[c]) return false;
      row[r] = true;
      col[c] = true;
    }
  }
  return true;
}

int FiniteMatrixGroup::order_of(int i) const {
  int k = 1;
  int x = i;
  while (x != identity) {
    x = table[x][i];
    ++k;
    if (k > size()) throw std::logic_error("FiniteMatrixGroup: element of unbounded order");
  }
  return k;
}

FiniteMatrixGroup group_from_elements(std::vector<ComplexMatrix> elements, double tol) {
  FiniteMatrixGroup g;
  g.elements = std::move(elements);
  const int n = g.size();
  if (n == 0) throw ClosureError("group_from_elements: empty element list");
  const Eigen::Index m = g.elements.front().rows();
  const auto id = g.find(ComplexMatrix::Identity(m, m), tol);
  if (!id) throw ClosureError("group_from_elements: identity missing");
  g.identity = *id;
  g.table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto k = g.find(g.elements[i] * g.elements[j], tol);
      if (!k) throw ClosureError("group_from_elements: element list is not closed");
      g.table[i][j] = *k;
    }
  }
  return g;
}

FiniteMatrixGroup group_closure(const std::vector<ComplexMatrix>& generators, int cap, double tol) {
  if (generators.empty()) throw std::invalid_argument("group_closure: no generators");
  const Eigen::Index m = generators.front().rows();
  std::vector<ComplexMatrix> elements{ComplexMatrix::Identity(m, m)};
  auto known = [&](const ComplexMatrix& x) {
    return std::any_of(elements.begin(), elements.end(),
                       [&](const ComplexMatrix& e) { return matrix_distance(e, x) <= tol; });
  };
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const ComplexMatrix x = elements[frontier.front()];
    frontier.pop_front();
    for (const auto& s : generators) {
      if (s.rows() != m || s.cols() != m) throw std::invalid_argument("group_closure: generator size mismatch");
      ComplexMatrix y = x * s;
      if (known(y)) continue;
      elements.push_back(std::move(y));
      if (static_cast<int>(elements.size()) > cap) {
        throw ClosureError("group_closure: more than " + std::to_string(cap) + " elements");
      }
      frontier.push_back(elements.size() - 1);
    }
  }
  return group_from_elements(std::move(elements), tol);
}

std::vector<int> generated_subgroup(const FiniteMatrixGroup& g, const std::vector<int>& generators) {
  std::vector<bool> in(g.size(), false);
  std::vector<int> members{g.identity};
  in[g.identity] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (int s : generators) {
      const int y = g.table[members[head]][s];
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> commutator_subgroup(const FiniteMatrixGroup& g) {
  std::vector<int> commutators;
  for (int x = 0; x < g.size(); ++x) {
    for (int y = 0; y < g.size(); ++y) {
      const int c = g.table[g.table[g.inverse(x)][g.inverse(y)]][g.table[x][y]];
      if (std::find(commutators.begin(), commutators.end(), c) == commutators.end()) {
        commutators.push_back(c);
      }
    }
  }
  return generated_subgroup(g, commutators);
}

ComplexVector cubic_base_point() {
  ComplexVector u(4);
  u << 1.0, 0.0, 0.0, 1.0;
  return u;
}

StabilizerCondition stabilizer_condition(const ComplexMatrix& g, double tol) {
  static const HamiltonianAction cubic = su2_cubic();
  const ComplexVector u0 = cubic_base_point();
  const ComplexVector image = act(cubic, g, u0);
  StabilizerCondition c;
  c.lambda = u0.dot(image) / u0.squaredNorm();
  c.residual = (image - c.lambda * u0).norm() / u0.norm();
  c.holds = c.residual <= tol && std::abs(std::abs(c.lambda) - 1.0) <= tol;
  return c;
}

ComplexMatrix cubic_rotation(int k) {
  const double h = std::sqrt(3.0) / 2.0;
  static const std::array<Complex, 6> roots{Complex(1.0, 0.0),  Complex(0.5, h),   Complex(-0.5, h),
                                            Complex(-1.0, 0.0), Complex(-0.5, -h), Complex(0.5, -h)};
  const Complex alpha = roots[static_cast<std::size_t>(((k % 6) + 6) % 6)];
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = alpha;
  m(1, 1) = std::conj(alpha);
  return m;
}

ComplexMatrix cubic_flip() {
  ComplexMatrix b(2, 2);
  b << 0.0, kI, kI, 0.0;
  return b;
}

std::vector<ComplexMatrix> cubic_stabilizer_generators() {
  std::vector<ComplexMatrix> gens{cubic_flip()};
  for (int k = 0; k < 6; ++k) gens.push_back(cubic_rotation(k));
  return gens;
}

StabilizerSearch full_stabilizer_search(int samples, std::uint64_t seed, double cluster_tol) {
  const HamiltonianAction cubic = su2_cubic();
  const ProjectivePoint base(cubic_base_point());
  StabilizerSearch out;
  out.samples = samples;
  out.group = group_closure(cubic_stabilizer_generators());
  out.all_satisfy_condition = true;

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const ComplexMatrix start = random_special_unitary(2, rng);
    const OrbitAlignment fit = align_in_orbit(cubic, base, base, start);
    // Re-project onto SU(2) against drift from repeated products.
    const Eigen::JacobiSVD<ComplexMatrix> svd(fit.element, Eigen::ComputeFullU | Eigen::ComputeFullV);
    ComplexMatrix g = svd.matrixU() * svd.matrixV().adjoint();
    g *= std::polar(1.0, -std::arg(g.determinant()) / 2.0);
    const StabilizerCondition cond = stabilizer_condition(g);
    if (!(cond.residual < 1e-10)) continue;
    ++out.converged;
    if (!cond.holds) out.all_satisfy_condition = false;
    const bool seen = std::any_of(out.found.begin(), out.found.end(), [&](const ComplexMatrix& f) {
      return matrix_distance(f, g) <= cluster_tol;
    });
    if (!seen) out.found.push_back(g);
  }

  std::vector<bool> hit(out.group.size(), false);
  for (const auto& f : out.found) {
    double best = std::numeric_limits<double>::infinity();
    int best_index = -1;
    for (int i = 0; i < out.group.size(); ++i) {
      const double d = matrix_distance(out.group.elements[i], f);
      if (d < best) {
        best = d;
        best_index = i;
      }
    }
    out.max_distance_to_closure = std::max(out.max_distance_to_closure, best);
    if (best <= cluster_tol) {
      out.found_in_closure.push_back(best_index);
      hit[best_index] = true;
    } else {
      out.found_in_closure.push_back(-1);
      ++out.outside;
    }
  }
  out.matches_closure = out.outside == 0 && std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  return out;
}

namespace {

bool is_unit_scalar(const ComplexMatrix& m, double tol) {
  const Complex s = m(0, 0);
  if (std::abs(std::abs(s) - 1.0) > tol) return false;
  const ComplexMatrix scalar = s * ComplexMatrix::Identity(m.rows(), m.cols());
  return matrix_distance(m, scalar) <= tol;
}

}  // namespace

QuotientGroup projective_image(const FiniteMatrixGroup& g) {
  constexpr double tol = 1e-9;
  std::vector<int> kernel;
  for (int i = 0; i < g.size(); ++i) {
    if (is_unit_scalar(g.elements[i], tol)) kernel.push_back(i);
  }
  // Scalars are central, so this cannot fail for a genuine matrix group.
  for (int k : kernel) {
    for (int x = 0; x < g.size(); ++x) {
      const int conj = g.table[g.table[x][k]][g.inverse(x)];
      if (std::find(kernel.begin(), kernel.end(), conj) == kernel.end()) {
        throw std::logic_error("projective_image: scalar subgroup is not normal");
      }
    }
  }

  QuotientGroup q;
  q.kernel_order = static_cast<int>(kernel.size());
  q.coset_of.assign(g.size(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.size(); ++x) {
    if (q.coset_of[x] != -1) continue;
    const int index = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int k : kernel) q.coset_of[g.table[x][k]] = index;
  }
  const int n = static_cast<int>(reps.size());
  for (int r : reps) q.image.elements.push_back(g.elements[r]);
  q.image.identity = q.coset_of[g.identity];
  q.image.table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) q.image.table[i][j] = q.coset_of[g.table[reps[i]][reps[j]]];
  }
  return q;
}

int count_isomorphisms_to_s3(const FiniteMatrixGroup& g) {
  if (g.size() != 6) return 0;
  std::array<std::array<int, 3>, 6> perms{};
  std::array<int, 3> p{0, 1, 2};
  for (auto& slot : perms) {
    slot = p;
    std::next_permutation(p.begin(), p.end());
  }
  auto perm_index = [&](const std::array<int, 3>& x) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), x) - perms.begin());
  };
  std::array<std::array<int, 6>, 6> s3{};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int t = 0; t < 3; ++t) c[t] = perms[i][perms[j][t]];
      s3[i][j] = perm_index(c);
    }
  }
  std::array<int, 6> phi{0, 1, 2, 3, 4, 5};
  int count = 0;
  do {
    bool hom = true;
    for (int i = 0; i < 6 && hom; ++i) {
      for (int j = 0; j < 6 && hom; ++j) {
        hom = phi[g.table[i][j]] == s3[phi[i]][phi[j]];
      }
    }
    if (hom) ++count;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return count;
}

bool is_d3(const FiniteMatrixGroup& g) { return g.size() == 6 && !g.is_abelian(); }

RelationReport verify_relations(const FiniteMatrixGroup& g, double tol) {
  RelationReport r;
  const ComplexMatrix a = cubic_rotation(1);
  const ComplexMatrix b = cubic_flip();
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const auto ia = g.find(a, 1e-9);
  const auto ib = g.find(b, 1e-9);
  if (!ia || !ib) throw std::invalid_argument("verify_relations: generators a, b not in the group");

  const ComplexMatrix a3 = a * a * a;
  const ComplexMatrix a5 = a3 * a * a;
  r.b_squared_vs_minus_identity = matrix_distance(b * b, -id);
  r.b_squared_vs_a_cubed = matrix_distance(b * b, a3);
  r.ba_vs_a5b = matrix_distance(b * a, a5 * b);

  const std::vector<int> comm = commutator_subgroup(g);
  r.commutator_order = static_cast<int>(comm.size());
  std::vector<int> expected;
  for (int k : {0, 2, 4}) {
    const auto idx = g.find(cubic_rotation(k), 1e-9);
    if (idx) expected.push_back(*idx);
  }
  std::sort(expected.begin(), expected.end());
  r.commutator_is_a_squared_powers = expected.size() == 3 && comm == expected;
  r.pass = r.b_squared_vs_minus_identity <= tol && r.b_squared_vs_a_cubed <= tol &&
           r.ba_vs_a5b <= tol && r.commutator_is_a_squared_powers;
  return r;
}

FiniteMatrixGroup sun_projective_stabilizer(int n) {
  if (n < 2) throw std::invalid_argument("sun_projective_stabilizer: n must be >= 2");
  const HamiltonianAction sun = sun_matrices(n);
  const ComplexVector identity_point = flatten(ComplexMatrix::Identity(n, n));
  // A I = lambda I forces A = lambda I, and det A = lambda^n = 1.
  std::vector<ComplexMatrix> elements;
  for (int k = 0; k < n; ++k) {
    const Complex lambda = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    ComplexMatrix m = lambda * ComplexMatrix::Identity(n, n);
    const ComplexVector image = act(sun, m, identity_point);
    if ((image - lambda * identity_point).norm() > 1e-12) {
      throw std::logic_error("sun_projective_stabilizer: scalar does not fix [I]");
    }
    elements.push_back(std::move(m));
  }
  return group_from_elements(std::move(elements), 1e-9);
}

bool is_cyclic(const FiniteMatrixGroup& g) {
  for (int i = 0; i < g.size(); ++i) {
    if (g.order_of(i) == g.size()) return true;
  }
  return false;
}

}  // namespace lagr
