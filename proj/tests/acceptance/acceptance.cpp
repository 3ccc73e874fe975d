// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "lagr/commands.hpp"
#include "lagr/homology.hpp"
#include "lagr/optimizer.hpp"
#include "lagr/reduction.hpp"
#include "lagr/stabilizer.hpp"
#include "lagr/verifier.hpp"

using namespace lagr;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

ProjectivePoint cubic_base() { return ProjectivePoint(cubic_base_point()); }

Outcome moment_zero() {
  const ComplexVector u = cubic_base_point();
  const double mu = moment(su2_cubic(), u).norm();
  const auto w = cubic_zero_set_residuals(u);
  const auto uw = cubic_zero_set_residuals_unweighted(u);
  const double eq = std::max({w.weight_equation, w.raising_equation, uw.raising_equation});
  std::ostringstream d;
  d << "|Phi(1,0,0,1)| = " << mu << ", max equation residual = " << eq;
  return {mu < 1e-15 && eq < 1e-14, d.str()};
}

Outcome hamilton() {
  std::mt19937_64 rng(42);
  double worst = 0.0;
  for (const auto& a : {torus_cpn(2), su2_cubic(), sun_matrices(3), circle_cn(2)}) {
    for (int s = 0; s < 50; ++s) {
      const ComplexVector p = random_unit_vector(a.ambient_dim, rng);
      for (const auto& xi : a.lie_basis) worst = std::max(worst, check_hamilton_identity(a, p, xi, 4, rng));
    }
  }
  std::ostringstream d;
  d << "max residual over 4 actions x 50 points = " << worst;
  return {worst < 1e-6, d.str()};
}

Outcome verdicts() {
  bool ok = true;
  std::ostringstream d;
  const LagrangianVerdict c = lagrangian_verdict(su2_cubic(), cubic_base());
  const double iso = isotropy_check(su2_cubic(), cubic_base());
  ok &= c.orbit_dim == 3 && iso < 1e-9 && c.lagrangian;
  d << "cubic dim " << c.orbit_dim << " iso " << iso << "; sun dims";
  for (int n : {2, 3}) {
    const LagrangianVerdict v = lagrangian_verdict(sun_matrices(n), ProjectivePoint(flatten(ComplexMatrix::Identity(n, n))));
    ok &= v.orbit_dim == n * n - 1 && v.lagrangian;
    d << ' ' << v.orbit_dim;
  }
  for (int n = 1; n <= 4; ++n) {
    ok &= lagrangian_verdict(torus_cpn(n), ProjectivePoint(ComplexVector::Ones(n + 1))).lagrangian;
  }
  d << "; torus n=1..4";
  for (int n : {1, 2}) {
    CommandOptions o;
    o.n = n;
    const Report r = cmd_verify("circle", o);
    for (const auto& chk : r.checks) {
      if (chk.name == "zero_set_dimension") {
        ok &= chk.status == CheckStatus::pass && chk.value == 2 * n + 1;
        d << "; circle n=" << n << " zero set dim " << chk.value;
      }
    }
  }
  return {ok, d.str()};
}

Outcome stabilizer() {
  const FiniteMatrixGroup g = group_closure(cubic_stabilizer_generators());
  const QuotientGroup q = projective_image(g);
  const RelationReport rel = verify_relations(g);
  const StabilizerSearch s = full_stabilizer_search(500, 42);
  const double relmax = std::max({rel.b_squared_vs_minus_identity, rel.b_squared_vs_a_cubed, rel.ba_vs_a5b});
  const bool ok = g.size() == 12 && q.image.size() == 6 && !q.image.is_abelian() &&
                  count_isomorphisms_to_s3(q.image) > 0 && relmax < 1e-12 && s.outside == 0 &&
                  rel.commutator_order == 3 && commutator_subgroup(g).size() == 3;
  std::ostringstream d;
  d << "|G| = " << g.size() << ", |image| = " << q.image.size() << ", relations " << relmax
    << ", search outside = " << s.outside << " (" << s.found.size() << " clusters), |[G,G]| = " << rel.commutator_order;
  return {ok, d.str()};
}

Outcome topology() {
  const AbelianGroup snf = abelianization(binary_dihedral_presentation());
  const AbelianGroup brute = brute_force_abelianization(group_closure(cubic_stabilizer_generators())).group;
  bool ok = snf == AbelianGroup::cyclic(4) && brute == snf;
  const HomologyTable t = spaceform_table(snf);
  const std::array<std::string, 4> h{"Z", "Z_4", "0", "Z"}, c{"Z", "0", "Z_4", "Z"}, c2{"Z_2", "Z_2", "Z_2", "Z_2"};
  int entries = 0;
  for (int i = 0; i < 4; ++i) {
    entries += (t.homology[i].to_string() == h[i]) + (t.cohomology[i].to_string() == c[i]) +
               (t.cohomology_z2[i].to_string() == c2[i]);
  }
  ok &= entries == 12;
  ok &= cohomology_with_coeffs(snf, 8, 1) == AbelianGroup::cyclic(4);
  const ConstraintReport r = constraint_check(snf, 3);
  ok &= r.z2_dims == std::array<int, 4>{1, 1, 1, 1} && r.z2_matches_rpn;
  ok &= !r.two_torsion && r.seidel_nonzero && r.seidel_not_elementary && !r.seidel_third_applicable;
  std::ostringstream d;
  d << "H1 = " << snf.to_string() << " (SNF) / " << brute.to_string() << " (brute force), table " << entries
    << "/12, H^1(L;Z_8) = " << cohomology_with_coeffs(snf, 8, 1).to_string()
    << ", 2-torsion hypothesis " << (r.two_torsion ? "holds" : "fails")
    << ", se(1)/(2) " << (r.seidel_nonzero && r.seidel_not_elementary ? "satisfied" : "violated")
    << ", se(3) " << (r.seidel_third_applicable ? "applicable" : "inapplicable");
  return {ok, d.str()};
}

Outcome single_orbit() {
  CommandOptions o;
  const Report r = cmd_find_zeros(o);
  double obj = 0.0, dist = 0.0;
  bool all_evidence = !r.checks.empty();
  for (const auto& s : r.data["starts"]) {
    obj = std::max(obj, s["objective"].get<double>());
    dist = std::max(dist, s["orbit_distance"].get<double>());
  }
  for (const auto& c : r.checks) all_evidence &= c.status == CheckStatus::evidence;
  std::ostringstream d;
  d << r.data["starts"].size() << " starts, max |Phi|^2 = " << obj << ", max orbit distance = " << dist
    << ", status " << (all_evidence ? "evidence" : "not evidence");
  return {r.data["starts"].size() == 20 && obj < 1e-16 && dist < 1e-6 && all_evidence, d.str()};
}

Outcome reduction() {
  bool ok = true;
  std::ostringstream d;
  for (int n : {1, 2}) {
    const AlpEmbeddingCheck c = verify_alp_embedding(n, 100, 42);
    ok &= c.max_residual < 1e-8 && c.dimension_identity && 2 * c.dim_z == c.dim_product;
    d << "n=" << n << ": residual " << c.max_residual << ", dim Z " << c.dim_z << " = " << c.dim_product << "/2; ";
  }
  return {ok, d.str()};
}

Outcome quaternion() {
  const QuaternionSpanReport q = verify_quaternion_span(50, 42);
  double scalar = 0.0;
  for (const auto& m : q.matrices) scalar = std::max(scalar, m.residual);
  std::ostringstream d;
  d << q.matrices.size() << " matrices, max residual " << scalar << ", span rank " << q.span_rank
    << ", max orbit distance " << q.max_orbit_distance;
  return {q.matrices.size() == 4 && scalar < 1e-12 && q.span_rank == 4 && q.max_orbit_distance < 1e-9, d.str()};
}

Outcome determinism() {
  CommandOptions o;
  o.seed = 42;
  const auto t0 = std::chrono::steady_clock::now();
  const std::string a = cmd_all(o).to_json().dump(2);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::string b = cmd_all(o).to_json().dump(2);
  std::ostringstream d;
  d << "reports " << (a == b ? "byte-identical" : "differ") << " (" << a.size() << " bytes), full suite " << secs
    << " s";
  return {a == b && secs < 120.0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"moment map zero at [1,0,0,1]", moment_zero},
      {"Hamilton identity, all registered actions", hamilton},
      {"Lagrangian verdicts", verdicts},
      {"stabilizer of [x^3 + y^3]", stabilizer},
      {"topology of the quotient", topology},
      {"single-orbit evidence", single_orbit},
      {"reduction embedding", reduction},
      {"quaternion span", quaternion},
      {"determinism and runtime", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.ok;
    std::printf("%s %zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
