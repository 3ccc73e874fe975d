#pragma once

// Exact topology of the spherical space form L = S^3 / Gamma:
// abelianization of finite presentations by Smith normal form over
// arbitrary-precision integers, the (co)homology table of a closed
// orientable 3-manifold with finite H_1, and coefficient changes through
// Hom / Ext.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lagr/stabilizer.hpp"

namespace lagr {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& operator()(int i, int j) { return data_[index(i, j)]; }
  const mpz_class& operator()(int i, int j) const { return data_[index(i, j)]; }

  bool operator==(const IntMatrix& other) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  // Fraction-free (Bareiss) elimination; exact.
  mpz_class determinant() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  // row[dst] += factor * row[src]
  void add_row_multiple(int dst, int src, const mpz_class& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(int dst, int src, const mpz_class& factor);
  void negate_row(int r);

  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithForm {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix v;  // cols x cols, unimodular
};

// U * M * V = D.
SmithForm smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group Z^free_rank + Z_{d_1} + ... with
// d_1 | d_2 | ... and every d_i > 1.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  // Any list of cyclic orders (0 means Z, 1 is dropped); normalized to
  // invariant factors.
  static AbelianGroup from_cyclic(int free_rank, const std::vector<std::int64_t>& orders);
  static AbelianGroup trivial() { return {}; }
  static AbelianGroup integers() { return from_cyclic(1, {}); }
  static AbelianGroup cyclic(std::int64_t m) { return from_cyclic(0, {m}); }

  int free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }

  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  // 2 A = 0
  bool is_two_torsion() const;
  // Z_2^g with g >= 1; returns g, or nullopt when not elementary abelian 2-group.
  std::optional<int> elementary_two_rank() const;
  std::optional<std::int64_t> order() const;

  // "0", "Z", "Z^2", "Z_4", "Z_2^2", "Z x Z_4"
  std::string to_string() const;

  bool operator==(const AbelianGroup& other) const = default;

 private:
  int free_rank_ = 0;
  std::vector<std::int64_t> factors_;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

// Coefficients: modulus 0 means Z, otherwise Z_m.
AbelianGroup hom_into(const AbelianGroup& a, std::int64_t modulus);
AbelianGroup ext_into(const AbelianGroup& a, std::int64_t modulus);

// Generator i (0-based) appears as i + 1, its inverse as -(i + 1).
using Word = std::vector<int>;

struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;

  // Throws std::invalid_argument on out-of-range letters.
  void validate() const;
};

// <a, b | a^6, b^2 a^-3, b a b^-1 a>.
Presentation binary_dihedral_presentation();

// Row r, column g: exponent sum of generator g in relator r.
IntMatrix exponent_sum_matrix(const Presentation& p);

AbelianGroup abelianization(const Presentation& p);

struct BruteForceAbelianization {
  AbelianGroup group;
  int commutator_order = 0;
  int quotient_order = 0;
};

// Quotient by the commutator subgroup, classified by counting solutions
// of x^(p^k) = 1 for each prime p dividing its order.
BruteForceAbelianization brute_force_abelianization(const FiniteMatrixGroup& g);

struct HomologyTable {
  std::array<AbelianGroup, 4> homology;      // H_i(L; Z)
  std::array<AbelianGroup, 4> cohomology;    // H^i(L; Z)
  std::array<AbelianGroup, 4> cohomology_z2; // H^i(L; Z_2)

  int euler_characteristic() const;
};

// Closed orientable 3-manifold with finite H_1: H_0 = H_3 = Z, H_2 = 0 by
// duality, cohomology by the universal coefficient theorem.
// Throws std::invalid_argument when H1 has a free part.
HomologyTable spaceform_table(const AbelianGroup& h1);

// H^degree(L; Z_m) = Hom(H_degree, Z_m) + Ext(H_{degree-1}, Z_m).
AbelianGroup cohomology_with_coeffs(const AbelianGroup& h1, std::int64_t m, int degree);

struct ConstraintReport {
  int n = 0;
  AbelianGroup h1;
  bool dimension_matches = false;         // dim L = 3 = n
  // Hypothesis 2 H_1 = 0 of the 2-torsion theorem.
  bool two_torsion = false;
  std::array<int, 4> z2_dims{};           // dim_{Z_2} H^i(L; Z_2)
  bool z2_matches_rpn = false;            // graded vector spaces agree with RP^n
  std::int64_t seidel_modulus = 0;        // 2n + 2
  AbelianGroup h1_seidel;                 // H^1(L; Z_{2n+2})
  bool seidel_nonzero = false;            // H^1(L; Z_{2n+2}) != 0
  bool seidel_not_elementary = false;     // not Z_2^g with g >= 2
  bool seidel_third_applicable = false;   // H^1(L; Z_{2n+2}) = Z_2
  bool seidel_third_holds = false;        // H^i(L; Z_2) = Z_2 for i = 0..n (meaningful when applicable)
  // Ring-level statement for even n is not checked by this toolkit.
  bool ring_statement_checked = false;
  bool consistent = false;
};

ConstraintReport constraint_check(const AbelianGroup& h1, int n);

}  // namespace lagr
