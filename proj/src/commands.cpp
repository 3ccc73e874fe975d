#include "lagr/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "lagr/actions.hpp"
#include "lagr/homology.hpp"
#include "lagr/optimizer.hpp"
#include "lagr/reduction.hpp"
#include "lagr/stabilizer.hpp"
#include "lagr/verifier.hpp"

namespace lagr {

namespace {

constexpr int kHamiltonPoints = 50;
constexpr int kHamiltonTrials = 4;
constexpr int kEquivarianceSamples = 20;

Json matrix_json(const ComplexMatrix& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json r = Json::array(), c = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Json vector_json(const ComplexVector& v) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Json real_json(const RealVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json group_json(const FiniteMatrixGroup& g) {
  Json elements = Json::array();
  for (const auto& e : g.elements) elements.push_back(matrix_json(e));
  return Json{{"order", g.size()}, {"identity", g.identity}, {"elements", std::move(elements)},
              {"table", g.table}};
}

DescentParams descent_params(const CommandOptions& opts) {
  DescentParams p;
  p.seed = opts.seed;
  p.grad_tol = opts.grad_tol;
  p.max_iters = opts.max_iters;
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

template <typename F>
Report timed(F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r = body();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Generic self-consistency of a registered action plus the verdict at `point`.
void action_checks(Report& r, const HamiltonianAction& a, const ProjectivePoint& point,
                   std::optional<int> expected_orbit_dim, bool expect_lagrangian, std::uint64_t seed) {
  const Tolerances& tol = default_tolerances();
  std::mt19937_64 rng(seed);

  const DualVector mu = moment(a, point);
  r.data["moment"] = real_json(mu.coords);
  if (a.abelian) {
    r.add(Check::holds("moment_value_coadjoint_fixed", is_coadjoint_fixed(a, mu, tol.zero_level),
                       "abelian action: every level is coadjoint-fixed"));
  } else {
    r.add(Check::below("moment_norm_at_point", mu.norm(), tol.zero_level));
  }

  double hamilton = 0.0;
  for (int s = 0; s < kHamiltonPoints; ++s) {
    const ComplexVector p = random_unit_vector(a.ambient_dim, rng);
    for (const auto& xi : a.lie_basis) {
      hamilton = std::max(hamilton, check_hamilton_identity(a, p, xi, kHamiltonTrials, rng));
    }
  }
  r.add(Check::below("hamilton_identity_residual", hamilton, tol.hamilton,
                     "max over Lie basis at 50 random points"));

  double equivariance = 0.0;
  for (int s = 0; s < kEquivarianceSamples; ++s) {
    const ComplexMatrix g = a.random_element(rng);
    const ComplexVector p = random_unit_vector(a.ambient_dim, rng);
    equivariance = std::max(equivariance, check_equivariance(a, g, p));
  }
  r.add(Check::below("equivariance_residual", equivariance, tol.equivariance));

  const LagrangianVerdict v = lagrangian_verdict(a, point, tol);
  r.data["verdict"] = Json{{"orbit_dim", v.orbit_dim},
                           {"half_dim", v.half_dim},
                           {"max_omega_residual", v.max_omega_residual},
                           {"in_fixed_level", v.in_fixed_level},
                           {"isotropic", v.isotropic},
                           {"lagrangian", v.lagrangian},
                           {"point", vector_json(v.point)}};
  if (expected_orbit_dim) r.add(Check::equals("orbit_dimension", v.orbit_dim, *expected_orbit_dim));
  r.add(Check::equals("stabilizer_algebra_dimension", stabilizer_algebra_dimension(a, point),
                      a.group_dim - v.orbit_dim, "kernel of the generator map"));
  r.add(Check::below("isotropy_residual", isotropy_check(a, point), tol.isotropy));
  if (expect_lagrangian) {
    r.add(Check::equals("orbit_dim_equals_half_dim", v.orbit_dim, v.half_dim));
    r.add(Check::holds("lagrangian", v.lagrangian));
  }
}

Report verify_torus(int n, std::uint64_t seed) {
  Report r;
  r.command = "verify";
  r.parameters = Json{{"example", "torus"}, {"n", n}};
  r.seed = seed;
  const HamiltonianAction a = torus_cpn(n);
  const ProjectivePoint point(ComplexVector::Ones(n + 1));
  action_checks(r, a, point, n, true, seed);
  return r;
}

Report verify_su2_cubic(std::uint64_t seed) {
  Report r;
  r.command = "verify";
  r.parameters = Json{{"example", "su2-cubic"}};
  r.seed = seed;
  const HamiltonianAction a = su2_cubic();
  const ProjectivePoint point(cubic_base_point());
  const auto weighted = cubic_zero_set_residuals(point.rep());
  const auto unweighted = cubic_zero_set_residuals_unweighted(point.rep());
  r.add(Check::below("weight_equation_residual", weighted.weight_equation, 1e-14));
  r.add(Check::below("raising_equation_residual", weighted.raising_equation, 1e-14));
  r.add(Check::below("unweighted_raising_equation_residual", unweighted.raising_equation, 1e-14));
  action_checks(r, a, point, 3, true, seed);

  const ProjectivePoint highest(ComplexVector::Unit(4, 0));
  const LagrangianVerdict off = lagrangian_verdict(a, highest);
  r.add(Check::equals("orbit_dimension_of_x3", off.orbit_dim, 2, "orbit of [1,0,0,0] is a 2-sphere"));
  r.add(Check::holds("x3_not_lagrangian", !off.lagrangian && !off.in_fixed_level));
  return r;
}

Report verify_sun(int n, std::uint64_t seed) {
  Report r;
  r.command = "verify";
  r.parameters = Json{{"example", "sun"}, {"n", n}};
  r.seed = seed;
  const HamiltonianAction a = sun_matrices(n);
  const ProjectivePoint point(flatten(ComplexMatrix::Identity(n, n)));
  action_checks(r, a, point, n * n - 1, true, seed);
  const FiniteMatrixGroup stab = sun_projective_stabilizer(n);
  r.add(Check::equals("projective_stabilizer_order", stab.size(), n));
  r.add(Check::holds("projective_stabilizer_cyclic", is_cyclic(stab)));
  r.data["projective_stabilizer"] = group_json(stab);
  return r;
}

Report verify_circle(int n, std::uint64_t seed) {
  Report r;
  r.command = "verify";
  r.parameters = Json{{"example", "circle"}, {"n", n}};
  r.seed = seed;
  const HamiltonianAction a = circle_cn(n);
  ComplexVector z = ComplexVector::Ones(n + 1);
  z /= z.norm();
  const ProjectivePoint point(z);
  action_checks(r, a, point, 1, false, seed);
  // The zero set is the unit sphere: its tangent space is {v : Re<z, v> = 0}.
  std::vector<ComplexVector> tangent;
  for (int j = 0; j <= n; ++j) {
    for (const Complex unit : {Complex(1.0, 0.0), kI}) {
      ComplexVector e = ComplexVector::Zero(n + 1);
      e(j) = unit;
      tangent.push_back(e - z * z.dot(e).real());
    }
  }
  r.add(Check::equals("zero_set_dimension", numeric_rank(tangent), 2 * n + 1));
  return r;
}

Report verify_quaternion(std::uint64_t seed) {
  Report r;
  r.command = "verify";
  r.parameters = Json{{"example", "quaternion-span"}};
  r.seed = seed;
  const Tolerances& tol = default_tolerances();
  const QuaternionSpanReport q = verify_quaternion_span(50, seed);
  Json mats = Json::array();
  for (const auto& m : q.matrices) {
    r.add(Check::below("unit_scalar_times_su2[" + m.label + "]", m.residual, tol.quaternion_scalar));
    mats.push_back(Json{{"label", m.label},
                        {"scalar", Json{{"re", m.scalar.real()}, {"im", m.scalar.imag()}}},
                        {"element", matrix_json(m.element)}});
  }
  r.add(Check::equals("span_rank", q.span_rank, 4));
  r.add(Check::below("max_orbit_distance", q.max_orbit_distance, tol.quaternion_orbit,
                     "50 random unit real combinations vs the SU(2) orbit of [I]"));
  r.data["matrices"] = std::move(mats);
  r.data["orbit_distances"] = q.orbit_distances;
  return r;
}

}  // namespace

Report cmd_verify(const std::string& example, const CommandOptions& opts) {
  return timed([&] {
    if (example == "torus") return verify_torus(opts.n.value_or(2), opts.seed);
    if (example == "su2-cubic") return verify_su2_cubic(opts.seed);
    if (example == "sun") return verify_sun(opts.n.value_or(3), opts.seed);
    if (example == "circle") return verify_circle(opts.n.value_or(1), opts.seed);
    if (example == "quaternion-span") return verify_quaternion(opts.seed);
    throw UsageError("unknown example '" + example + "' (expected torus, su2-cubic, sun, circle, quaternion-span)");
  });
}

Report cmd_find_zeros(const CommandOptions& opts) {
  return timed([&] {
    if (opts.starts < 1) throw UsageError("--starts must be >= 1");
    const DescentParams params = descent_params(opts);
    const Tolerances& tol = default_tolerances();
    const HamiltonianAction a = su2_cubic();
    const ProjectivePoint base(cubic_base_point());

    Report r;
    r.command = "find-zeros";
    r.parameters = Json{{"action", "su2-cubic"},
                        {"starts", opts.starts},
                        {"grad_tol", params.grad_tol},
                        {"max_iters", params.max_iters}};
    r.seed = opts.seed;

    double worst_objective = 0.0;
    double worst_distance = 0.0;
    int converged = 0;
    Json per_start = Json::array();
    for (int s = 0; s < opts.starts; ++s) {
      const DescentResult d = minimize_moment_norm(a, seeded_start(a, opts.seed, s), params);
      const double dist = orbit_membership(a, base, ProjectivePoint(d.point), params, 20);
      worst_objective = std::max(worst_objective, d.objective);
      worst_distance = std::max(worst_distance, dist);
      converged += d.converged;
      per_start.push_back(Json{{"start", s},
                               {"objective", d.objective},
                               {"grad_norm", d.grad_norm},
                               {"iters", d.iters},
                               {"converged", d.converged},
                               {"orbit_distance", dist},
                               {"point", vector_json(d.point)}});
    }
    r.add(Check::below("max_objective", worst_objective, tol.zero_objective).as_evidence());
    r.add(Check::below("max_orbit_distance_to_base", worst_distance, tol.orbit_membership,
                       "every zero found lies on the orbit of [1,0,0,1]")
              .as_evidence());
    r.data["starts_meeting_grad_tol"] = converged;
    r.data["interpretation"] =
        "numerical evidence that the zero level set is a single orbit; not a proof";
    r.data["starts"] = std::move(per_start);
    return r;
  });
}

Report cmd_stabilizer(const CommandOptions& opts) {
  return timed([&] {
    const Tolerances& tol = default_tolerances();
    const int samples = opts.samples.value_or(500);
    if (samples < 1) throw UsageError("--samples must be >= 1");
    Report r;
    r.command = "stabilizer";
    r.parameters = Json{{"samples", samples}};
    r.seed = opts.seed;

    double rotation_lambda = 0.0, flip_lambda = 0.0, condition = 0.0;
    for (int k = 0; k < 6; ++k) {
      const StabilizerCondition c = stabilizer_condition(cubic_rotation(k));
      condition = std::max(condition, c.residual);
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;  // alpha^3 = (-1)^k
      rotation_lambda = std::max(rotation_lambda, std::abs(c.lambda - Complex(sign, 0.0)));
    }
    const StabilizerCondition flip = stabilizer_condition(cubic_flip());
    condition = std::max(condition, flip.residual);
    flip_lambda = std::min(std::abs(flip.lambda - kI), std::abs(flip.lambda + kI));
    r.add(Check::below("generator_condition_residual", condition, tol.stabilizer_condition));
    r.add(Check::below("rotation_lambda_is_alpha_cubed", rotation_lambda, tol.stabilizer_condition));
    r.add(Check::below("flip_lambda_is_plus_minus_i", flip_lambda, tol.stabilizer_condition));

    const FiniteMatrixGroup g = group_closure(cubic_stabilizer_generators());
    r.add(Check::equals("closure_order", g.size(), 12));
    r.add(Check::holds("closure_table_latin_square", g.is_latin_square()));

    const QuotientGroup q = projective_image(g);
    r.add(Check::equals("scalar_kernel_order", q.kernel_order, 2));
    r.add(Check::equals("projective_image_order", q.image.size(), 6));
    r.add(Check::holds("projective_image_nonabelian", !q.image.is_abelian()));
    r.add(Check::equals("isomorphisms_to_s3", count_isomorphisms_to_s3(q.image), 6,
                        "exhaustive over 720 bijections; |Aut(S3)| = 6"));

    const RelationReport rel = verify_relations(g);
    r.add(Check::below("b_squared_equals_minus_identity", rel.b_squared_vs_minus_identity, tol.relation));
    r.add(Check::below("b_squared_equals_a_cubed", rel.b_squared_vs_a_cubed, tol.relation));
    r.add(Check::below("ba_equals_a5b", rel.ba_vs_a5b, tol.relation));
    r.add(Check::equals("commutator_subgroup_order", rel.commutator_order, 3));
    r.add(Check::holds("commutator_subgroup_is_1_a2_a4", rel.commutator_is_a_squared_powers));

    const StabilizerSearch search = full_stabilizer_search(samples, opts.seed);
    r.add(Check::equals("search_elements_outside_closure", search.outside, 0));
    r.add(Check::equals("search_distinct_elements", static_cast<long long>(search.found.size()), 12));
    r.add(Check::holds("search_matches_closure", search.matches_closure));
    r.add(Check::holds("search_elements_satisfy_condition", search.all_satisfy_condition));
    r.add(Check::below("search_max_distance_to_closure", search.max_distance_to_closure, tol.search_cluster));

    const int n = opts.n.value_or(2);
    if (n < 2) throw UsageError("--n must be >= 2 for the SU(n) stabilizer");
    const FiniteMatrixGroup zn = sun_projective_stabilizer(n);
    r.add(Check::equals("sun_projective_stabilizer_order", zn.size(), n));
    r.add(Check::holds("sun_projective_stabilizer_cyclic", is_cyclic(zn)));

    r.data["closure"] = group_json(g);
    r.data["projective_image"] = group_json(q.image);
    r.data["search"] = Json{{"samples", search.samples},
                            {"converged", search.converged},
                            {"clusters", search.found.size()},
                            {"found_in_closure", search.found_in_closure}};
    r.data["order_derivation"] =
        "closure of <a, b> with a^6 = 1, b^2 = a^3, b a b^-1 = a^-1 has 12 elements";
    return r;
  });
}

Report cmd_homology(const CommandOptions& opts) {
  return timed([&] {
    const int n = opts.n.value_or(3);
    if (n < 1) throw UsageError("--n must be >= 1");
    Report r;
    r.command = "homology";
    r.parameters = Json{{"n", n}};
    r.seed = opts.seed;

    const Presentation gamma = binary_dihedral_presentation();
    const AbelianGroup h1 = abelianization(gamma);
    const FiniteMatrixGroup g = group_closure(cubic_stabilizer_generators());
    const BruteForceAbelianization brute = brute_force_abelianization(g);
    r.add(Check::holds("abelianization_snf_is_Z4", h1 == AbelianGroup::cyclic(4), h1.to_string()));
    r.add(Check::holds("abelianization_brute_force_agrees", brute.group == h1, brute.group.to_string()));
    r.add(Check::equals("commutator_subgroup_order", brute.commutator_order, 3));

    const HomologyTable t = spaceform_table(h1);
    const std::array<std::string, 4> hom{"Z", "Z_4", "0", "Z"};
    const std::array<std::string, 4> coh{"Z", "0", "Z_4", "Z"};
    const std::array<std::string, 4> coh2{"Z_2", "Z_2", "Z_2", "Z_2"};
    int matches = 0;
    Json table = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
      matches += t.homology[i].to_string() == hom[i];
      matches += t.cohomology[i].to_string() == coh[i];
      matches += t.cohomology_z2[i].to_string() == coh2[i];
      table.push_back(Json{{"degree", i},
                           {"H_i(L;Z)", t.homology[i].to_string()},
                           {"H^i(L;Z)", t.cohomology[i].to_string()},
                           {"H^i(L;Z_2)", t.cohomology_z2[i].to_string()}});
    }
    r.add(Check::equals("table_entries_matching", matches, 12));
    r.add(Check::equals("euler_characteristic", t.euler_characteristic(), 0));
    const AbelianGroup h1_z8 = cohomology_with_coeffs(h1, 8, 1);
    r.add(Check::holds("H1_Z8_is_Z4", h1_z8 == AbelianGroup::cyclic(4), h1_z8.to_string()));

    const ConstraintReport c = constraint_check(h1, n);
    if (n == 3) {
      r.add(Check::holds("z2_cohomology_matches_RP3", c.z2_matches_rpn));
      r.add(Check::holds("two_torsion_hypothesis_fails", !c.two_torsion));
      r.add(Check::holds("seidel_1_nonzero", c.seidel_nonzero, c.h1_seidel.to_string()));
      r.add(Check::holds("seidel_2_not_elementary_2_group", c.seidel_not_elementary));
      r.add(Check::holds("seidel_3_not_applicable", !c.seidel_third_applicable));
    }
    r.data["table"] = std::move(table);
    r.data["relation_matrix"] = exponent_sum_matrix(gamma).to_string();
    r.data["constraints"] = Json{{"n", c.n},
                                 {"H1", c.h1.to_string()},
                                 {"dimension_matches", c.dimension_matches},
                                 {"two_torsion", c.two_torsion},
                                 {"z2_dims", c.z2_dims},
                                 {"z2_matches_RPn", c.z2_matches_rpn},
                                 {"seidel_modulus", c.seidel_modulus},
                                 {"H1_seidel", c.h1_seidel.to_string()},
                                 {"seidel_1", c.seidel_nonzero},
                                 {"seidel_2", c.seidel_not_elementary},
                                 {"seidel_3_applicable", c.seidel_third_applicable},
                                 {"seidel_3_conclusion", c.seidel_third_holds},
                                 {"ring_statement", "unverified"},
                                 {"consistent", c.consistent}};
    return r;
  });
}

Report cmd_reduction(const CommandOptions& opts) {
  return timed([&] {
    const Tolerances& tol = default_tolerances();
    const int samples = opts.samples.value_or(100);
    if (samples < 1) throw UsageError("--samples must be >= 1");
    std::vector<int> ns;
    if (opts.n) {
      if (*opts.n < 1) throw UsageError("--n must be >= 1");
      ns = {*opts.n};
    } else {
      ns = {1, 2};
    }
    Report r;
    r.command = "reduction";
    r.parameters = Json{{"n", ns}, {"samples", samples}};
    r.seed = opts.seed;
    Json dims = Json::array();
    for (int n : ns) {
      const AlpEmbeddingCheck c = verify_alp_embedding(n, samples, opts.seed);
      const std::string tag = "[n=" + std::to_string(n) + "]";
      r.add(Check::below("pullback_residual" + tag, c.max_residual, tol.alp_residual));
      r.add(Check::equals("dim_Z" + tag, c.measured_dim_z, c.dim_m - c.dim_g));
      r.add(Check::equals("dim_M_red" + tag, c.measured_dim_m_red, c.dim_m - 2 * c.dim_g));
      r.add(Check::equals("twice_dim_Z_vs_dim_product" + tag, 2 * c.dim_z, c.dim_product));
      dims.push_back(Json{{"n", n},
                          {"dim_M", c.dim_m},
                          {"dim_G", c.dim_g},
                          {"dim_Z", c.dim_z},
                          {"dim_M_red", c.dim_m_red},
                          {"dim_M_x_M_red", c.dim_product}});
    }
    // Shifting trick at the point level: Phi'(m, Phi(m)) = 0.
    const HamiltonianAction cubic = su2_cubic();
    RealVector mu(3);
    mu << 1.5, 0.0, 0.0;
    const DualVector shifted = shifted_moment(cubic, ComplexVector::Unit(4, 0), DualVector{mu});
    r.add(Check::below("shifted_moment_at_x3", shifted.norm(), tol.zero_level));
    r.data["dimensions"] = std::move(dims);
    r.data["assumption"] = "the circle acts freely on the zero level set";
    r.data["reduced_form"] = "omega_red defined through pi^* omega_red = i^* omega on horizontal lifts";
    return r;
  });
}

Report cmd_all(const CommandOptions& opts) {
  return timed([&] {
    Report r;
    r.command = "all";
    r.seed = opts.seed;
    r.parameters = Json{{"starts", opts.starts}, {"grad_tol", opts.grad_tol}, {"max_iters", opts.max_iters}};
    CommandOptions o = opts;
    for (int n = 1; n <= 4; ++n) {
      o.n = n;
      r.sections.push_back(cmd_verify("torus", o));
    }
    r.sections.push_back(cmd_verify("su2-cubic", opts));
    for (int n : {2, 3}) {
      o.n = n;
      r.sections.push_back(cmd_verify("sun", o));
    }
    for (int n : {1, 2}) {
      o.n = n;
      r.sections.push_back(cmd_verify("circle", o));
    }
    r.sections.push_back(cmd_verify("quaternion-span", opts));
    o = opts;
    o.n.reset();
    o.samples.reset();
    r.sections.push_back(cmd_find_zeros(o));
    r.sections.push_back(cmd_stabilizer(o));
    r.sections.push_back(cmd_homology(o));
    r.sections.push_back(cmd_reduction(o));
    return r;
  });
}

}  // namespace lagr
