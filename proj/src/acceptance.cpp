#include "nk6/acceptance.hpp"

#include <Eigen/LU>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "nk6/classify.hpp"
#include "nk6/cnormal.hpp"
#include "nk6/connection.hpp"
#include "nk6/sampling.hpp"
#include "nk6/stable.hpp"
#include "nk6/sweep.hpp"
#include "nk6/verify.hpp"

namespace nk6 {

namespace {

FormS e(std::initializer_list<int> idx) { return FormS::basis(6, idx); }

FormS normal_rho(int eps) { return e({1, 2, 3}) + (e({1, 5, 6}) + e({4, 2, 6}) + e({4, 5, 3})) * Scalar(eps); }

SUStructure catalog_structure(const CatalogEntry& c) {
  return build_su_structure(c.algebra, c.forms.at("omega"), c.forms.at("psi_plus"));
}

std::string count(int n) { return std::to_string(n); }

}  // namespace

Report criterion_normal_forms() {
  Report r;
  for (int eps : {1, -1}) {
    const Scalar lambda = lambda_invariant(normal_rho(eps));
    r.check(std::string("lambda_normal_form_eps") + (eps > 0 ? "+1" : "-1"), lambda == Scalar(4 * eps),
            {{"lambda", to_string(lambda)}});
  }
  MatrixS expected = zeros<Scalar>(6, 6);
  for (int i = 0; i < 6; ++i) expected(i, i) = Scalar(i < 3 ? 1 : -1);
  const StableInfo para = build_stable_info(e({1, 2, 3}) + e({4, 5, 6}));
  r.check("para_normal_form_j", para.J == expected && para.epsilon == 1,
          {{"epsilon", std::to_string(para.epsilon)}, {"lambda", to_string(para.lambda)}});
  return r;
}

Report criterion_regeneration() {
  Report r;
  for (int tau : {1, -1}) {
    for (int eps : {-1, 1}) {
      const std::string prefix = std::string("tau") + (tau > 0 ? "+1" : "-1") + ".eps" + (eps > 0 ? "+1" : "-1");
      r.append(regeneration_report(tau, eps), prefix);
    }
  }
  return r;
}

Report criterion_unique_solution() { return verify_unique_solution(); }

Report criterion_summary_structure() {
  Report r;
  const CatalogEntry c = catalog("sl2sl2-nk-summary");
  const SUStructure s = catalog_structure(c);
  r.check("printed_structure", s.J == c.endos.at("J") && s.g == c.metrics.at("g") &&
                                   s.psi_minus == c.forms.at("psi_minus"));
  r.check("d_omega_3_psi_plus", ce_differential(c.algebra, s.omega) == s.psi_plus * Scalar(3));
  r.check("d_psi_minus_2_omega_sq", ce_differential(c.algebra, s.psi_minus) == wedge(s.omega, s.omega) * Scalar(2));
  r.check("signature", s.signature.negative == 4 && s.signature.positive == 2,
          {{"signature_neg", count(s.signature.negative)}, {"signature_pos", count(s.signature.positive)}});
  const ConnectionTable lc = levi_civita(c.algebra, s.g);
  const CubicTensor a = nabla_J(lc, s.g, s.J, s.epsilon);
  const NearlyKahlerCheck nk = nearly_kahler_direct(a, s.g);
  r.check("norms", nk.nabla_j_norm_sq == Scalar(4) && s.psi_norm_sq == Scalar(4),
          {{"nabla_j_norm_sq", to_string(nk.nabla_j_norm_sq)}, {"psi_norm_sq", to_string(s.psi_norm_sq)}});
  const CurvatureData curv = curvature_ricci(c.algebra, lc, s.g);
  r.check("ricci_5g", curv.ricci == s.g * Scalar(5));
  r.append(nk_verify_report(c.algebra, s, NkMode::Both), "nk_verify");
  return r;
}

Report criterion_halfflat_example(const AcceptanceOptions& opt) {
  Report r;
  const CatalogEntry c = catalog("s3s3-halfflat-example");
  const SUStructure s = catalog_structure(c);
  const FormS domega = ce_differential(c.algebra, s.omega);
  r.check("d_psi_plus_zero", ce_differential(c.algebra, s.psi_plus).is_zero());
  r.check("d_psi_minus_omega_sq", ce_differential(c.algebra, s.psi_minus) == wedge(s.omega, s.omega));
  r.check("d_omega_nonzero", !domega.is_zero());
  r.check("d_omega_not_30_03", !is_type_30_03(domega, s.J, s.epsilon));
  const TorsionFlags f = torsion_flags(c.algebra, s);
  const bool skew = nijenhuis(c.algebra, s.J, s.epsilon, s.g).totally_skew;
  r.check("nijenhuis_skew", skew);
  r.check("flags", f.half_flat && f.nearly_half_flat && f.nu && *f.nu == Scalar(1) && !f.nk_exterior,
          {{"nu", f.nu ? to_string(*f.nu) : "none"}});
  // Half-flat structures: nearly half-flat iff N totally skew, in both directions. Closed compatible
  // 3-forms a e123 + b e456 + t d omega, and random pullbacks of the flat normal forms.
  std::mt19937_64 rng(opt.seed);
  int half_flat = 0;
  int agree = 0;
  int both_true = 0;
  int both_false = 0;
  auto classify = [&](const LieAlgebra& lie, const FormS& omega, const FormS& rho) {
    if (lambda_invariant(rho).is_zero()) return;
    SUStructure t;
    try {
      t = build_su_structure(lie, omega, rho);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::SqrtNotRepresentable) return;
      throw;
    }
    const TorsionFlags ft = torsion_flags(lie, t);
    if (!ft.half_flat) return;
    ++half_flat;
    const bool sk = nijenhuis(lie, t.J, t.epsilon, t.g).totally_skew;
    agree += sk == ft.nearly_half_flat;
    both_true += sk && ft.nearly_half_flat;
    both_false += !sk && !ft.nearly_half_flat;
  };
  const FormS omega0 = sampling::normal_two_form();
  for (const char* name : {"so3+so3", "so12+so12", "so12+so12:tau=-1"}) {
    const LieAlgebra lie = catalog(name).algebra;
    const FormS domega0 = ce_differential(lie, omega0);
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int t = -2; t <= 2; ++t) {
          classify(lie, omega0, e({1, 2, 3}) * Scalar(a) + e({4, 5, 6}) * Scalar(b) + domega0 * Scalar(t));
        }
  }
  const LieAlgebra flat = catalog("abelian6").algebra;
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixS l = sampling::random_positive_matrix(rng);
    for (int eps : {-1, 1}) classify(flat, pullback(l, omega0), pullback(l, sampling::normal_three_form(eps)));
  }
  r.check("half_flat_iff", agree == half_flat && both_true > 0 && both_false > 0,
          {{"half_flat", count(half_flat)},
           {"agree", count(agree)},
           {"skew_and_nearly_half_flat", count(both_true)},
           {"neither", count(both_false)}});
  return r;
}

Report criterion_so3so3() { return so3so3_nonexistence(); }

Report criterion_sweep(const AcceptanceOptions& opt) {
  SweepOptions so;
  so.seed = opt.seed;
  so.starts = opt.sweep_starts;
  so.threads = opt.threads;
  const SweepResult res = numeric_uniqueness_sweep(so);
  Report r = sweep_report(res, so);
  r.check("sweep.start_count", so.starts >= 1000, {{"starts", count(so.starts)}});
  r.check("sweep.runtime_budget", res.seconds < 30.0, {{"seconds", format_double(res.seconds)}});
  return r;
}

Report criterion_lorentz(const AcceptanceOptions& opt) {
  Report r;
  auto fixture = [&](const std::string& id, const Eigen::Matrix3d& c, NormalCase expected) {
    const NormalFormResult n = cnormal_reduce(c);
    const bool ok = n.case_tag == expected && n.residuals.lorentz() < 1e-9 && n.residuals.orthochronous &&
                    n.residuals.shape < 1e-8 && std::abs(n.residuals.diagonal_product) > 0;
    r.check(id, ok,
            {{"case", to_string(n.case_tag)},
             {"lorentz", format_double(n.residuals.lorentz())},
             {"shape", format_double(n.residuals.shape)}});
  };
  Eigen::Matrix3d spacelike;
  spacelike << 0, 1, 2, 1, 0.5, -1, 0, 3, 1;
  Eigen::Matrix3d null;
  null << 1, 0.5, 0, 1, -1, 2, 0, 1, 1;
  fixture("fixture_timelike", Eigen::Matrix3d::Identity(), NormalCase::Timelike);
  fixture("fixture_spacelike", spacelike, NormalCase::Spacelike);
  fixture("fixture_null", null, NormalCase::Null);

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(-2, 2);
  int reduced = 0;
  int failures = 0;
  int cases[3] = {0, 0, 0};
  double worst_lorentz = 0;
  double worst_shape = 0;
  for (int done = 0; done < opt.lorentz_samples;) {
    Eigen::Matrix3d c;
    for (int i = 0; i < 9; ++i) c(i / 3, i % 3) = u(rng);
    if (std::abs(c.determinant()) <= 0.1) continue;
    ++done;
    try {
      const NormalFormResult n = cnormal_reduce(c);
      worst_lorentz = std::max(worst_lorentz, n.residuals.lorentz());
      worst_shape = std::max(worst_shape, n.residuals.shape);
      const bool ok = n.residuals.lorentz() < 1e-9 && n.residuals.orthochronous && n.residuals.shape < 1e-8 &&
                      std::abs(n.residuals.diagonal_product) > 0;
      if (ok) {
        ++reduced;
        ++cases[static_cast<int>(n.case_tag)];
      } else {
        ++failures;
      }
    } catch (const Error&) {
      ++failures;
    }
  }
  r.check("random_matrices", reduced == opt.lorentz_samples && opt.lorentz_samples >= 1000,
          {{"samples", count(opt.lorentz_samples)},
           {"reduced", count(reduced)},
           {"failures", count(failures)},
           {"timelike", count(cases[0])},
           {"spacelike", count(cases[1])},
           {"null", count(cases[2])},
           {"max_lorentz_residual", format_double(worst_lorentz)},
           {"max_shape_residual", format_double(worst_shape)}});
  return r;
}

Report criterion_properties(const AcceptanceOptions& opt) {
  Report r;
  std::mt19937_64 rng(opt.seed);

  // Naturality of lambda, phi, J and psi- under maps with positive determinant.
  int natural = 0;
  for (int trial = 0; trial < opt.naturality_samples; ++trial) {
    const MatrixS l = sampling::random_positive_matrix(rng);
    const Scalar det = determinant(l);
    const FormS rho = normal_rho(trial % 2 == 0 ? 1 : -1);
    const FormS pulled = pullback(l, rho);
    const StableInfo a = build_stable_info(rho);
    const StableInfo b = build_stable_info(pulled);
    natural += lambda_invariant(pulled) == det * det * a.lambda && b.phi == det * a.phi &&
               b.J == inverse(l) * a.J * l && b.psi_minus == pullback(l, a.psi_minus);
  }
  r.check("stable_naturality", natural == opt.naturality_samples && opt.naturality_samples >= 200,
          {{"samples", count(opt.naturality_samples)}, {"equivariant", count(natural)}});

  // Float path against the exact path.
  double worst = 0;
  for (const char* name : {"sl2sl2-nk-summary", "s3s3-halfflat-example"}) {
    const FormS rho = catalog(name).forms.at("psi_plus");
    for (int orientation : {1, -1}) {
      const StableInfo s = build_stable_info(rho, orientation);
      const StableInfoD f = build_stable_info_float(rho.map([](const Scalar& x) { return x.to_double(); }), orientation);
      worst = std::max(worst, (f.J - to_double(s.J)).cwiseAbs().maxCoeff());
      worst = std::max(worst, std::abs(f.lambda - s.lambda.to_double()));
    }
  }
  r.check("float_cross_check", worst < 1e-10, {{"max_difference", format_double(worst)}});

  // Master identity with -eps on the Nijenhuis term on every eps = -1 catalog structure.
  int structures = 0;
  int holds = 0;
  int displayed_failures = 0;
  for (const auto& name : catalog_names()) {
    const CatalogEntry c = catalog(name);
    if (!c.forms.count("omega") || !c.forms.count("psi_plus")) continue;
    const SUStructure s = catalog_structure(c);
    if (s.epsilon != -1) continue;
    ++structures;
    const ConnectionTable lc = levi_civita(c.algebra, s.g);
    holds += master_identity_failures(c.algebra, lc, s.g, s.J, s.omega, -1) == 0;
    displayed_failures += master_identity_failures(c.algebra, lc, s.g, s.J, s.omega, -1, +1);
  }
  r.check("master_identity", structures > 0 && holds == structures,
          {{"structures", count(structures)}, {"holds", count(holds)}});
  r.info("master_identity_plus_eps_variant", {{"failing_triples", count(displayed_failures)}});

  // char_NK: the direct condition iff d omega of type (3,0)+(0,3) and N totally skew.
  int checked = 0;
  int agree = 0;
  int nk_count = 0;
  auto char_nk = [&](const LieAlgebra& lie, const FormS& omega, const FormS& rho) {
    const SUStructure s = build_su_structure(lie, omega, rho);
    const ConnectionTable lc = levi_civita(lie, s.g);
    const bool direct = nearly_kahler_direct(nabla_J(lc, s.g, s.J, s.epsilon), s.g).holds;
    const bool exterior = is_type_30_03(ce_differential(lie, s.omega), s.J, s.epsilon) &&
                          nijenhuis(lie, s.J, s.epsilon, s.g).totally_skew;
    ++checked;
    agree += direct == exterior;
    nk_count += direct;
  };
  for (const auto& name : catalog_names()) {
    const CatalogEntry c = catalog(name);
    if (c.forms.count("omega") && c.forms.count("psi_plus")) char_nk(c.algebra, c.forms.at("omega"), c.forms.at("psi_plus"));
  }
  const CatalogEntry summary = catalog("sl2sl2-nk-summary");
  const char* algebras[] = {"so12+so12", "so3+so3", "so12+so12:tau=-1"};
  for (int trial = 0; trial < opt.char_nk_samples; ++trial) {
    const int kind = trial % 4;
    if (kind == 0) {
      const MatrixS l = sampling::random_automorphism(rng, false);
      char_nk(summary.algebra, pullback(l, summary.forms.at("omega")), pullback(l, summary.forms.at("psi_plus")));
    } else {
      const MatrixS l = sampling::random_positive_matrix(rng);
      char_nk(catalog(algebras[kind - 1]).algebra, pullback(l, sampling::normal_two_form()),
              pullback(l, sampling::normal_three_form(trial % 8 < 4 ? -1 : 1)));
    }
  }
  r.check("char_nk", agree == checked && nk_count > 0 && nk_count < checked,
          {{"structures", count(checked)}, {"agree", count(agree)}, {"nearly_kaehler", count(nk_count)}});

  // Second-derivative identity and constant type on the nearly Kaehler catalog structure.
  {
    const SUStructure s = catalog_structure(summary);
    const ConnectionTable lc = levi_civita(summary.algebra, s.g);
    r.check("second_derivative_identity", second_derivative_failures(lc, s.g, s.J) == 0);
    r.check("constant_type", constant_type_failures(lc, s.g, s.J, s.epsilon, Scalar(1)) == 0);
  }

  // Koszul connection on random metrics.
  int metrics = 0;
  int koszul = 0;
  for (const auto& name : catalog_names()) {
    const LieAlgebra lie = catalog(name).algebra;
    for (int trial = 0; trial < 3; ++trial) {
      MatrixS g;
      do {
        const MatrixS m = sampling::random_matrix(rng, lie.dim());
        g = m + m.transpose();
      } while (determinant(g).is_zero());
      const ConnectionTable c = levi_civita(lie, g);
      ++metrics;
      koszul += is_metric(c, g) && is_torsion_free(lie, c);
    }
  }
  r.check("koszul", koszul == metrics, {{"metrics", count(metrics)}, {"metric_torsion_free", count(koszul)}});
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  const std::vector<std::pair<std::string, std::function<Report()>>> steps = {
      {"normal-form-invariants", criterion_normal_forms},
      {"symbolic-regeneration", criterion_regeneration},
      {"unique-solution", criterion_unique_solution},
      {"summary-structure", criterion_summary_structure},
      {"halfflat-example", [&] { return criterion_halfflat_example(opt); }},
      {"so3so3-nonexistence", criterion_so3so3},
      {"numeric-sweep", [&] { return criterion_sweep(opt); }},
      {"lorentz-normal-form", [&] { return criterion_lorentz(opt); }},
      {"property-suites", [&] { return criterion_properties(opt); }},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    CriterionResult c;
    c.number = static_cast<int>(i) + 1;
    c.title = steps[i].first;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.report = steps[i].second();
    } catch (const Error& err) {
      c.report.check("exception", false, {{"error", err.what()}});
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(c));
  }
  return out;
}

std::string acceptance_summary(const std::vector<CriterionResult>& results) {
  std::string out;
  int passed = 0;
  char buf[64];
  for (const auto& c : results) {
    passed += c.passed();
    std::snprintf(buf, sizeof buf, " (%.2f s)", c.seconds);
    out += std::string(c.passed() ? "PASS" : "FAIL") + " criterion " + std::to_string(c.number) + " " + c.title + buf;
    if (!c.passed()) {
      for (const auto& e : c.report.entries()) {
        if (e.status == Status::Fail) out += " failed=" + e.id;
      }
    }
    out += "\n";
  }
  out += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed\n";
  return out;
}

}  // namespace nk6
