#pragma once

// Finite stabilizer groups: the SU(2) stabilizer of [x^3 + y^3] under the
// cubic action, its image in SO(3) (= D_3), and the scalar stabilizer of
// [I] under SU(n) left multiplication.

#include <optional>
#include <vector>

#include "lagr/actions.hpp"

namespace lagr {

class ClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Max-abs entry distance, the metric used for deduplication.
double matrix_distance(const ComplexMatrix& x, const ComplexMatrix& y);

struct FiniteMatrixGroup {
  std::vector<ComplexMatrix> elements;
  // table[i][j] = index of elements[i] * elements[j]
  std::vector<std::vector<int>> table;
  int identity = 0;

  int size() const { return static_cast<int>(elements.size()); }
  std::optional<int> find(const ComplexMatrix& m, double tol) const;
  int inverse(int i) const;
  bool is_abelian() const;
  bool is_latin_square() const;
  int order_of(int i) const;
};

// Builds the multiplication table for a list already closed under products.
FiniteMatrixGroup group_from_elements(std::vector<ComplexMatrix> elements, double tol);

// Breadth-first closure under products, deduplicated at `tol`.
// Throws ClosureError when more than `cap` elements appear.
FiniteMatrixGroup group_closure(const std::vector<ComplexMatrix>& generators, int cap = 1000,
                                double tol = default_tolerances().closure_dedup);

// Subgroup generated by a set of element indices of G.
std::vector<int> generated_subgroup(const FiniteMatrixGroup& g, const std::vector<int>& generators);

// Subgroup generated by all x^{-1} y^{-1} x y.
std::vector<int> commutator_subgroup(const FiniteMatrixGroup& g);

// x^3 + y^3 in su2-cubic coordinates.
ComplexVector cubic_base_point();

struct StabilizerCondition {
  bool holds = false;
  Complex lambda;           // act(g, u0) = lambda u0 when holds
  double residual = 0.0;    // |act(g, u0) - lambda u0| / |u0|
};

// Throws GroupMembershipError unless g is in SU(2).
StabilizerCondition stabilizer_condition(const ComplexMatrix& g,
                                         double tol = default_tolerances().stabilizer_condition);

// diag(alpha, conj(alpha)) with alpha = exp(i pi k / 3), from exact constants.
ComplexMatrix cubic_rotation(int k);
// [[0, i], [i, 0]]
ComplexMatrix cubic_flip();

// The flip together with the six diagonal rotations.
std::vector<ComplexMatrix> cubic_stabilizer_generators();

struct StabilizerSearch {
  FiniteMatrixGroup group;                 // closure of the generators
  std::vector<ComplexMatrix> found;        // cluster representatives from the search
  std::vector<int> found_in_closure;       // matching closure index, -1 if none
  int samples = 0;
  int converged = 0;
  int outside = 0;                         // clusters farther than tol from the closure
  double max_distance_to_closure = 0.0;
  bool all_satisfy_condition = false;
  bool matches_closure = false;            // every closure element found, nothing outside
};

// Multi-start Gauss-Newton over SU(2) for |act(g, u0) - lambda u0| -> 0, with
// the unit scalar lambda eliminated by orthogonal projection. Converged
// solutions (residual < 1e-10) are clustered at `cluster_tol` and compared
// against the closure of cubic_stabilizer_generators().
StabilizerSearch full_stabilizer_search(int samples = 500, std::uint64_t seed = 42,
                                        double cluster_tol = default_tolerances().search_cluster);

struct QuotientGroup {
  FiniteMatrixGroup image;      // coset representatives with induced table
  std::vector<int> coset_of;    // element index of G -> index in image
  int kernel_order = 0;
};

// Quotient of G by the unit scalar matrices it contains.
QuotientGroup projective_image(const FiniteMatrixGroup& g);

// Number of bijections onto S_3 preserving the multiplication table
// (exhaustive over all 720 bijections; 0 unless |table| = 6).
int count_isomorphisms_to_s3(const FiniteMatrixGroup& g);

// Nonabelian of order 6.
bool is_d3(const FiniteMatrixGroup& g);

struct RelationReport {
  double b_squared_vs_minus_identity = 0.0;
  double b_squared_vs_a_cubed = 0.0;
  double ba_vs_a5b = 0.0;
  int commutator_order = 0;
  bool commutator_is_a_squared_powers = false;
  bool pass = false;
};

// a = cubic_rotation(1), b = cubic_flip(); both must be elements of g.
RelationReport verify_relations(const FiniteMatrixGroup& g,
                                double tol = default_tolerances().relation);

// Scalar matrices lambda I, lambda^n = 1: the elements A of SU(n) with
// A I proportional to I.
FiniteMatrixGroup sun_projective_stabilizer(int n);

bool is_cyclic(const FiniteMatrixGroup& g);

}  // namespace lagr
