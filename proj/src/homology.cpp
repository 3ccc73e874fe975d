#include "lagr/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lagr {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative size");
  data_.assign(static_cast<std::size_t>(rows) * cols, mpz_class(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: product size mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("IntMatrix: determinant of non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // Exact division is guaranteed by Sylvester's identity.
        mpz_class num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(int dst, int src, const mpz_class& factor) {
  for (int j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(int dst, int src, const mpz_class& factor) {
  for (int i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(int r) {
  for (int j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = s.d;
  const int rows = m.rows();
  const int cols = m.cols();

  for (int t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i) {
        for (int j = t; j < cols; ++j) {
          if (d(i, j) != 0 && (pi < 0 || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) return s;
      d.swap_rows(t, pi);
      s.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.v.swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const mpz_class q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        s.u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const mpz_class q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        s.v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      int bad_row = -1;
      for (int i = t + 1; i < rows && bad_row < 0; ++i) {
        for (int j = t + 1; j < cols; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      d.add_row_multiple(t, bad_row, 1);
      s.u.add_row_multiple(t, bad_row, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return s;
}

namespace {

std::int64_t to_int64(const mpz_class& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("invariant factor does not fit in 64 bits");
  return x.get_si();
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace

AbelianGroup AbelianGroup::from_cyclic(int free_rank, const std::vector<std::int64_t>& orders) {
  if (free_rank < 0) throw std::invalid_argument("AbelianGroup: negative free rank");
  AbelianGroup g;
  g.free_rank_ = free_rank;
  std::vector<std::int64_t> finite;
  for (std::int64_t o : orders) {
    if (o < 0) throw std::invalid_argument("AbelianGroup: negative cyclic order");
    if (o == 0) {
      ++g.free_rank_;
    } else if (o > 1) {
      finite.push_back(o);
    }
  }
  if (finite.empty()) return g;
  const int k = static_cast<int>(finite.size());
  IntMatrix diag(k, k);
  for (int i = 0; i < k; ++i) diag(i, i) = mpz_class(std::to_string(finite[static_cast<std::size_t>(i)]));
  const SmithForm s = smith_normal_form(diag);
  for (int i = 0; i < k; ++i) {
    const std::int64_t f = to_int64(s.d(i, i));
    if (f > 1) g.factors_.push_back(f);
  }
  return g;
}

bool AbelianGroup::is_two_torsion() const {
  return free_rank_ == 0 && std::all_of(factors_.begin(), factors_.end(), [](std::int64_t d) { return d == 2; });
}

std::optional<int> AbelianGroup::elementary_two_rank() const {
  if (factors_.empty() || !is_two_torsion()) return std::nullopt;
  return static_cast<int>(factors_.size());
}

std::optional<std::int64_t> AbelianGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  std::int64_t n = 1;
  for (std::int64_t d : factors_) n *= d;
  return n;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.push_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    std::string part = "Z_" + std::to_string(factors_[i]);
    if (j - i > 1) part += "^" + std::to_string(j - i);
    parts.push_back(part);
    i = j;
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " x " : "") + parts[i];
  return out;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<std::int64_t> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return AbelianGroup::from_cyclic(a.free_rank() + b.free_rank(), orders);
}

AbelianGroup hom_into(const AbelianGroup& a, std::int64_t modulus) {
  if (modulus < 0 || modulus == 1) throw std::invalid_argument("hom_into: modulus must be 0 or >= 2");
  if (modulus == 0) return AbelianGroup::from_cyclic(a.free_rank(), {});
  std::vector<std::int64_t> orders(static_cast<std::size_t>(a.free_rank()), modulus);
  for (std::int64_t d : a.invariant_factors()) orders.push_back(gcd64(d, modulus));
  return AbelianGroup::from_cyclic(0, orders);
}

AbelianGroup ext_into(const AbelianGroup& a, std::int64_t modulus) {
  if (modulus < 0 || modulus == 1) throw std::invalid_argument("ext_into: modulus must be 0 or >= 2");
  std::vector<std::int64_t> orders;
  for (std::int64_t d : a.invariant_factors()) orders.push_back(modulus == 0 ? d : gcd64(d, modulus));
  return AbelianGroup::from_cyclic(0, orders);
}

void Presentation::validate() const {
  if (generator_count < 0) throw std::invalid_argument("Presentation: negative generator count");
  for (const auto& w : relators) {
    for (int letter : w) {
      if (letter == 0 || std::abs(letter) > generator_count) {
        throw std::invalid_argument("Presentation: letter out of range");
      }
    }
  }
}

Presentation binary_dihedral_presentation() {
  // a = 1, b = 2
  return Presentation{2, {{1, 1, 1, 1, 1, 1}, {2, 2, -1, -1, -1}, {2, 1, -2, 1}}};
}

IntMatrix exponent_sum_matrix(const Presentation& p) {
  p.validate();
  IntMatrix m(static_cast<int>(p.relators.size()), p.generator_count);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (int letter : p.relators[r]) {
      m(static_cast<int>(r), std::abs(letter) - 1) += letter > 0 ? 1 : -1;
    }
  }
  return m;
}

AbelianGroup abelianization(const Presentation& p) {
  const IntMatrix m = exponent_sum_matrix(p);
  if (m.rows() == 0) return AbelianGroup::from_cyclic(p.generator_count, {});
  const SmithForm s = smith_normal_form(m);
  int rank = 0;
  std::vector<std::int64_t> factors;
  for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    if (s.d(i, i) != 0) {
      ++rank;
      factors.push_back(to_int64(s.d(i, i)));
    }
  }
  return AbelianGroup::from_cyclic(p.generator_count - rank, factors);
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace

BruteForceAbelianization brute_force_abelianization(const FiniteMatrixGroup& g) {
  const std::vector<int> kernel = commutator_subgroup(g);
  BruteForceAbelianization out;
  out.commutator_order = static_cast<int>(kernel.size());

  // Cosets x K; K is normal, so the induced product is well defined.
  std::vector<int> coset(g.size(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.size(); ++x) {
    if (coset[x] != -1) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int k : kernel) coset[g.table[x][k]] = c;
  }
  const int q = static_cast<int>(reps.size());
  out.quotient_order = q;
  auto mul = [&](int a, int b) { return coset[g.table[reps[a]][reps[b]]]; };
  const int id = coset[g.identity];
  auto power = [&](int x, std::int64_t e) {
    int r = id;
    for (std::int64_t i = 0; i < e; ++i) r = mul(r, x);
    return r;
  };

  std::vector<std::int64_t> elementary;
  for (std::int64_t p : prime_factors(q)) {
    // s_k = log_p #{x : x^(p^k) = 1}; s_k - s_{k-1} cyclic factors have exponent >= k.
    std::vector<int> s{0};
    std::int64_t pk = 1;
    for (;;) {
      pk *= p;
      std::int64_t count = 0;
      for (int x = 0; x < q; ++x) count += power(x, pk) == id;
      int log = 0;
      while (count > 1) {
        count /= p;
        ++log;
      }
      if (log == s.back()) break;
      s.push_back(log);
    }
    const int top = static_cast<int>(s.size()) - 1;
    for (int e = 1; e <= top; ++e) {
      const int at_least_e = s[e] - s[e - 1];
      const int at_least_next = e < top ? s[e + 1] - s[e] : 0;
      std::int64_t pe = 1;
      for (int i = 0; i < e; ++i) pe *= p;
      for (int c = 0; c < at_least_e - at_least_next; ++c) elementary.push_back(pe);
    }
  }
  out.group = AbelianGroup::from_cyclic(0, elementary);
  return out;
}

int HomologyTable::euler_characteristic() const {
  int chi = 0;
  for (int i = 0; i < 4; ++i) chi += (i % 2 == 0 ? 1 : -1) * homology[static_cast<std::size_t>(i)].free_rank();
  return chi;
}

namespace {

std::array<AbelianGroup, 4> spaceform_homology(const AbelianGroup& h1) {
  if (!h1.is_finite()) throw std::invalid_argument("spaceform_table: H_1 must be finite");
  return {AbelianGroup::integers(), h1, AbelianGroup::trivial(), AbelianGroup::integers()};
}

AbelianGroup uct(const std::array<AbelianGroup, 4>& h, std::int64_t modulus, int degree) {
  if (degree > 3) return AbelianGroup::trivial();
  AbelianGroup out = hom_into(h[static_cast<std::size_t>(degree)], modulus);
  if (degree >= 1) out = direct_sum(out, ext_into(h[static_cast<std::size_t>(degree - 1)], modulus));
  return out;
}

int z2_dimension(const AbelianGroup& g) {
  return static_cast<int>(g.invariant_factors().size());
}

}  // namespace

HomologyTable spaceform_table(const AbelianGroup& h1) {
  HomologyTable t;
  t.homology = spaceform_homology(h1);
  for (int i = 0; i < 4; ++i) {
    t.cohomology[static_cast<std::size_t>(i)] = uct(t.homology, 0, i);
    t.cohomology_z2[static_cast<std::size_t>(i)] = uct(t.homology, 2, i);
  }
  return t;
}

AbelianGroup cohomology_with_coeffs(const AbelianGroup& h1, std::int64_t m, int degree) {
  if (m < 2) throw std::invalid_argument("cohomology_with_coeffs: m must be >= 2");
  if (degree < 0 || degree > 3) throw std::invalid_argument("cohomology_with_coeffs: degree must be in 0..3");
  return uct(spaceform_homology(h1), m, degree);
}

ConstraintReport constraint_check(const AbelianGroup& h1, int n) {
  if (n < 1) throw std::invalid_argument("constraint_check: n must be >= 1");
  ConstraintReport r;
  r.n = n;
  r.h1 = h1;
  const auto homology = spaceform_homology(h1);
  r.dimension_matches = n == 3;
  r.two_torsion = h1.is_two_torsion();
  for (int i = 0; i < 4; ++i) r.z2_dims[static_cast<std::size_t>(i)] = z2_dimension(uct(homology, 2, i));

  // RP^n has H^i(; Z_2) = Z_2 for 0 <= i <= n.
  r.z2_matches_rpn = r.dimension_matches &&
                     std::all_of(r.z2_dims.begin(), r.z2_dims.end(), [](int d) { return d == 1; });

  r.seidel_modulus = 2 * static_cast<std::int64_t>(n) + 2;
  r.h1_seidel = uct(homology, r.seidel_modulus, 1);
  r.seidel_nonzero = !r.h1_seidel.is_trivial();
  const auto two_rank = r.h1_seidel.elementary_two_rank();
  r.seidel_not_elementary = !(two_rank && *two_rank >= 2);
  r.seidel_third_applicable = two_rank && *two_rank == 1;
  r.seidel_third_holds = true;
  for (int i = 0; i <= n; ++i) {
    if (uct(homology, 2, i) != AbelianGroup::cyclic(2)) r.seidel_third_holds = false;
  }
  r.ring_statement_checked = false;
  r.consistent = r.seidel_nonzero && r.seidel_not_elementary &&
                 (!r.seidel_third_applicable || r.seidel_third_holds) &&
                 (!r.two_torsion || r.z2_matches_rpn);
  return r;
}

}  // namespace lagr
