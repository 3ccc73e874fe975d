#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lagr/homology.hpp"

using namespace lagr;

namespace lagr {
void PrintTo(const AbelianGroup& g, std::ostream* os) { *os << g.to_string(); }
}  // namespace lagr

namespace {

using Small = std::vector<std::vector<long long>>;

long long small_det(const Small& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Small minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    s += (c % 2 ? -1 : 1) * m[0][c] * small_det(minor);
  }
  return s;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// k-th determinantal divisor: gcd of all k x k minors.
long long determinantal_divisor(const Small& m, int k) {
  std::vector<std::vector<int>> rows, cols;
  std::vector<int> cur;
  subsets(static_cast<int>(m.size()), k, 0, cur, rows);
  subsets(static_cast<int>(m[0].size()), k, 0, cur, cols);
  long long g = 0;
  for (const auto& r : rows) {
    for (const auto& c : cols) {
      Small sub;
      for (int i : r) {
        std::vector<long long> row;
        for (int j : c) row.push_back(m[i][j]);
        sub.push_back(row);
      }
      g = std::gcd(g, std::llabs(small_det(sub)));
    }
  }
  return g;
}

IntMatrix to_int(const Small& s) {
  IntMatrix m(static_cast<int>(s.size()), static_cast<int>(s[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = static_cast<long>(s[i][j]);
  return m;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Group-preserving moves on the relator set.
Presentation tietze_shuffle(Presentation p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> move(0, 4);
  for (int step = 0; step < 6; ++step) {
    std::uniform_int_distribution<std::size_t> pick(0, p.relators.size() - 1);
    std::uniform_int_distribution<int> gen(1, p.generator_count);
    const std::size_t i = pick(rng);
    Word& r = p.relators[i];
    switch (move(rng)) {
      case 0:  // conjugate by a generator
        r = concat(concat(Word{gen(rng)}, r), Word{0});
        r.back() = -r.front();
        break;
      case 1:  // invert
        r = inverse(r);
        break;
      case 2:  // cyclic rotation
        if (!r.empty()) std::rotate(r.begin(), r.begin() + 1, r.end());
        break;
      case 3: {  // multiply by a different relator
        const std::size_t j = (i + 1 + pick(rng) % (p.relators.size() - 1)) % p.relators.size();
        r = concat(r, p.relators[j]);
        break;
      }
      default:  // add a consequence as a new relator
        p.relators.push_back(concat(inverse(r), p.relators[pick(rng)]));
        break;
    }
  }
  return p;
}

}  // namespace

TEST(Homology, SmithFormAgreesWithDeterminantalDivisors) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
  for (int s = 0; s < 60; ++s) {
    const int r = dim(rng), c = dim(rng);
    Small m(r, std::vector<long long>(c));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    const IntMatrix im = to_int(m);
    const SmithForm f = smith_normal_form(im);
    EXPECT_TRUE(f.u * im * f.v == f.d);
    EXPECT_EQ(mpz_class(abs(f.u.determinant())), 1);
    EXPECT_EQ(mpz_class(abs(f.v.determinant())), 1);
    mpz_class product = 1;
    for (int k = 1; k <= std::min(r, c); ++k) {
      product *= f.d(k - 1, k - 1);
      EXPECT_GE(f.d(k - 1, k - 1), 0);
      if (k > 1 && f.d(k - 1, k - 1) != 0) EXPECT_EQ(f.d(k - 1, k - 1) % f.d(k - 2, k - 2), 0);
      EXPECT_EQ(product, mpz_class(static_cast<long>(determinantal_divisor(m, k)))) << "k=" << k << "\n" << im.to_string();
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(f.d(i, j), 0);
  }
}

TEST(Homology, SmithFormHandlesEntriesBeyond64Bits) {
  IntMatrix m(2, 2);
  m(0, 0) = mpz_class("340282366920938463463374607431768211456");  // 2^128
  m(1, 1) = mpz_class("6");
  const SmithForm f = smith_normal_form(m);
  EXPECT_TRUE(f.u * m * f.v == f.d);
  EXPECT_EQ(f.d(0, 0), 2);
  EXPECT_EQ(f.d(1, 1), mpz_class("1020847100762815390390123822295304634368"));  // 3 * 2^128
}

TEST(Homology, BareissDeterminant) {
  const IntMatrix m{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  EXPECT_EQ(m.determinant(), 4);
  EXPECT_EQ(IntMatrix({{0, 1}, {1, 0}}).determinant(), -1);
}

TEST(Homology, BinaryDihedralAbelianizationIsZ4) {
  const Presentation p = binary_dihedral_presentation();
  EXPECT_EQ(abelianization(p), AbelianGroup::cyclic(4));
  const BruteForceAbelianization b = brute_force_abelianization(group_closure(cubic_stabilizer_generators()));
  EXPECT_EQ(b.group, AbelianGroup::cyclic(4));
  EXPECT_EQ(b.commutator_order, 3);
  EXPECT_EQ(b.quotient_order, 4);
}

TEST(Homology, AbelianizationIsStableUnderTietzeMoves) {
  std::mt19937_64 rng(42);
  for (int s = 0; s < 20; ++s) {
    const Presentation p = tietze_shuffle(binary_dihedral_presentation(), rng);
    EXPECT_EQ(abelianization(p), AbelianGroup::cyclic(4));
  }
}

TEST(Homology, QuaternionGroupAbelianizesToKleinFour) {
  const Presentation q8{2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {2, 1, -2, 1}}};
  const AbelianGroup expected = AbelianGroup::from_cyclic(0, {2, 2});
  EXPECT_EQ(abelianization(q8), expected);
  const ComplexMatrix i{{kI, 0.0}, {0.0, -kI}};
  const ComplexMatrix j{{0.0, 1.0}, {-1.0, 0.0}};
  const FiniteMatrixGroup g = group_closure({i, j});
  ASSERT_EQ(g.size(), 8);
  EXPECT_EQ(brute_force_abelianization(g).group, expected);
  EXPECT_EQ(expected.to_string(), "Z_2^2");
}

TEST(Homology, FreeAbelianPresentation) {
  const Presentation z2{2, {{1, 2, -1, -2}}};
  EXPECT_EQ(abelianization(z2), AbelianGroup::from_cyclic(2, {}));
  EXPECT_THROW((Presentation{1, {{2}}}).validate(), std::invalid_argument);
}

TEST(Homology, AbelianGroupNormalization) {
  EXPECT_EQ(AbelianGroup::from_cyclic(0, {2, 3}), AbelianGroup::cyclic(6));
  EXPECT_EQ(AbelianGroup::from_cyclic(0, {4, 6}).invariant_factors(), (std::vector<std::int64_t>{2, 12}));
  EXPECT_EQ(AbelianGroup::from_cyclic(1, {1, 4}).to_string(), "Z x Z_4");
  EXPECT_TRUE(AbelianGroup::from_cyclic(0, {1}).is_trivial());
  EXPECT_EQ(AbelianGroup::from_cyclic(0, {2, 2, 2}).elementary_two_rank(), 3);
  EXPECT_FALSE(AbelianGroup::cyclic(4).elementary_two_rank().has_value());
}

TEST(Homology, HomAndExt) {
  const AbelianGroup z4 = AbelianGroup::cyclic(4);
  EXPECT_EQ(hom_into(z4, 0), AbelianGroup::trivial());
  EXPECT_EQ(ext_into(z4, 0), z4);
  EXPECT_EQ(hom_into(z4, 8), z4);
  EXPECT_EQ(hom_into(z4, 6), AbelianGroup::cyclic(2));
  EXPECT_EQ(ext_into(AbelianGroup::integers(), 5), AbelianGroup::trivial());
  EXPECT_EQ(hom_into(AbelianGroup::integers(), 3), AbelianGroup::cyclic(3));
}

TEST(Homology, SpaceFormTable) {
  const HomologyTable t = spaceform_table(AbelianGroup::cyclic(4));
  const std::array<std::string, 4> h{"Z", "Z_4", "0", "Z"}, c{"Z", "0", "Z_4", "Z"}, c2{"Z_2", "Z_2", "Z_2", "Z_2"};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(t.homology[i].to_string(), h[i]);
    EXPECT_EQ(t.cohomology[i].to_string(), c[i]);
    EXPECT_EQ(t.cohomology_z2[i].to_string(), c2[i]);
  }
  EXPECT_EQ(t.euler_characteristic(), 0);
  EXPECT_THROW(spaceform_table(AbelianGroup::integers()), std::invalid_argument);
}

TEST(Homology, PoincareDualityHoldsForFiniteH1) {
  for (std::int64_t m : {2, 3, 4, 12}) {
    const HomologyTable t = spaceform_table(AbelianGroup::cyclic(m));
    for (int i = 0; i < 4; ++i) EXPECT_EQ(t.homology[i], t.cohomology[3 - i]) << m << " " << i;
  }
}

TEST(Homology, CohomologyWithCoefficients) {
  const AbelianGroup z4 = AbelianGroup::cyclic(4);
  EXPECT_EQ(cohomology_with_coeffs(z4, 8, 1), z4);
  EXPECT_EQ(cohomology_with_coeffs(z4, 2, 2), AbelianGroup::cyclic(2));
  EXPECT_EQ(cohomology_with_coeffs(z4, 3, 1), AbelianGroup::trivial());
  EXPECT_THROW(cohomology_with_coeffs(z4, 1, 1), std::invalid_argument);
  EXPECT_THROW(cohomology_with_coeffs(z4, 8, 4), std::invalid_argument);
}

TEST(Homology, ConstraintCheckForTheSpaceForm) {
  const ConstraintReport r = constraint_check(AbelianGroup::cyclic(4), 3);
  EXPECT_TRUE(r.dimension_matches);
  EXPECT_FALSE(r.two_torsion);
  EXPECT_EQ(r.z2_dims, (std::array<int, 4>{1, 1, 1, 1}));
  EXPECT_TRUE(r.z2_matches_rpn);
  EXPECT_EQ(r.seidel_modulus, 8);
  EXPECT_EQ(r.h1_seidel, AbelianGroup::cyclic(4));
  EXPECT_TRUE(r.seidel_nonzero);
  EXPECT_TRUE(r.seidel_not_elementary);
  EXPECT_FALSE(r.seidel_third_applicable);
  EXPECT_FALSE(r.ring_statement_checked);
  EXPECT_TRUE(r.consistent);
}

TEST(Homology, ConstraintCheckForRP3) {
  const ConstraintReport r = constraint_check(AbelianGroup::cyclic(2), 3);
  EXPECT_TRUE(r.two_torsion);
  EXPECT_EQ(r.h1_seidel, AbelianGroup::cyclic(2));
  EXPECT_TRUE(r.seidel_third_applicable);
  EXPECT_TRUE(r.seidel_third_holds);
}
