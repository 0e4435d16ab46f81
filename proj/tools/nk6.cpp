#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "nk6/acceptance.hpp"
#include "nk6/classify.hpp"
#include "nk6/cnormal.hpp"
#include "nk6/io.hpp"
#include "nk6/stable.hpp"
#include "nk6/sweep.hpp"
#include "nk6/verify.hpp"

using namespace nk6;

namespace {

// Where a structure comes from: --catalog NAME or --input FILE.
struct Source {
  std::string catalog_name;
  std::string input_path;

  void attach(CLI::App* cmd) {
    auto* c = cmd->add_option("--catalog", catalog_name, "catalog entry");
    auto* i = cmd->add_option("--input", input_path, "input file");
    c->excludes(i);
  }

  CatalogEntry load() const {
    if (!input_path.empty()) return parse_input_file(input_path);
    if (!catalog_name.empty()) return catalog(catalog_name);
    throw Error(ErrorCode::UsageError, "one of --catalog or --input is required");
  }
};

const FormS& named_form(const CatalogEntry& e, const std::string& name) {
  auto it = e.forms.find(name);
  if (it == e.forms.end()) throw Error(ErrorCode::UnknownName, "no form '" + name + "' in " + e.name);
  return it->second;
}

std::string matrix_text(const Eigen::Matrix3d& m) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (!out.empty()) out += ',';
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out += buf;
    }
  }
  return out;
}

Report info_report(const CatalogEntry& e) {
  Report r;
  r.info("algebra", {{"name", e.algebra.name()}, {"dim", std::to_string(e.algebra.dim())}, {"field", std::to_string(e.field)}});
  r.check("jacobi_check", jacobi_check(e.algebra));
  const Signature k = signature(killing_form(e.algebra));
  r.info("killing_form", {{"negative", std::to_string(k.negative)},
                          {"positive", std::to_string(k.positive)},
                          {"zero", std::to_string(k.zero)}});
  for (const auto& [name, f] : e.forms) {
    r.info("form." + name, {{"degree", std::to_string(f.degree())}, {"value", to_string(f)}});
  }
  for (const auto& [name, m] : e.endos) r.info("endo." + name, {{"dim", std::to_string(m.rows())}});
  for (const auto& [name, m] : e.metrics) r.info("metric." + name, {{"dim", std::to_string(m.rows())}});
  return r;
}

Report catalog_list() {
  Report r;
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog(name);
    r.info("catalog." + name, {{"algebra", e.algebra.name()}, {"dim", std::to_string(e.algebra.dim())}});
  }
  return r;
}

Report derive_report(int tau, int eps) {
  Report r;
  const CoefficientSystem sys = coefficient_equations(derive_family(tau, eps));
  r.info("system", {{"tau", std::to_string(tau)},
                    {"eps", std::to_string(eps)},
                    {"form", "k d(27 eps psi-/k) - 54 eps omega^2"}});
  for (const auto& eq : sys.equations) r.info("equation." + eq.label, {{"polynomial", to_string(eq.polynomial)}});
  r.check("no_other_components", sys.unexpected.empty(), {{"count", std::to_string(sys.unexpected.size())}});
  const char* names[] = {"alpha", "beta", "gamma"};
  for (int i = 0; i < 3; ++i) {
    r.info(std::string("reduced.") + names[i], {{"polynomial", to_string(sys.reduced[i])}});
  }
  return r;
}

Report normal_form_report(const std::vector<double>& v) {
  Report r;
  Eigen::Matrix3d c;
  for (int i = 0; i < 9; ++i) c(i / 3, i % 3) = v[i];
  try {
    const NormalFormResult n = cnormal_reduce(c);
    const auto& res = n.residuals;
    r.info("normal_form", {{"case", to_string(n.case_tag)},
                           {"shape", n.swapped_shape ? "second" : "first"},
                           {"C_normal", matrix_text(n.C_normal)},
                           {"A", matrix_text(n.A)},
                           {"B", matrix_text(n.B)}});
    r.check("lorentz_relations", res.lorentz() < 1e-9,
            {{"A", format_double(res.lorentz_a)}, {"B", format_double(res.lorentz_b)},
             {"det_A", format_double(res.det_a)}, {"det_B", format_double(res.det_b)}});
    r.check("orthochronous", res.orthochronous);
    r.check("zero_pattern", res.shape < 1e-8, {{"residual", format_double(res.shape)}});
    r.check("nondegenerate", std::abs(res.diagonal_product) > 0,
            {{"alpha_beta_gamma", format_double(res.diagonal_product)}});
  } catch (const Error& err) {
    r.check("normal_form", false, {{"error", to_string(err.code())}});
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left-invariant nearly (para-)Kaehler structures on six-dimensional Lie groups"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "structured output");

  auto* info = app.add_subcommand("info", "summary of an algebra and its stored tensors");
  Source info_src;
  info_src.attach(info);

  auto* stable = app.add_subcommand("stable", "stable 3-form data");
  Source stable_src;
  stable_src.attach(stable);
  std::string rho_text;
  std::string rho_name = "psi_plus";
  int stable_orientation = 1;
  stable->add_option("--rho", rho_text, "3-form expression, e.g. \"1*123 + 1*456\"");
  stable->add_option("--form", rho_name, "form name in the catalog entry or input file");
  stable->add_option("--orientation", stable_orientation, "+1 or -1")->check(CLI::IsMember({1, -1}));

  std::string omega_name = "omega";
  std::string psi_name = "psi_plus";
  int orientation = 0;
  auto add_structure_options = [&](CLI::App* cmd, Source& src) {
    src.attach(cmd);
    cmd->add_option("--omega", omega_name, "2-form name");
    cmd->add_option("--psi", psi_name, "3-form name");
    cmd->add_option("--orientation", orientation, "0 (omega^3 positive), +1 or -1")
        ->check(CLI::IsMember({0, 1, -1}));
  };
  auto* su_build = app.add_subcommand("su-build", "assemble the structure from (omega, psi+)");
  Source su_src;
  add_structure_options(su_build, su_src);
  auto* flags = app.add_subcommand("classify-flags", "torsion flags");
  Source flags_src;
  add_structure_options(flags, flags_src);
  auto* nk = app.add_subcommand("nk-verify", "nearly Kaehler verification");
  Source nk_src;
  add_structure_options(nk, nk_src);
  std::string mode = "both";
  nk->add_option("--mode", mode, "exterior, connection or both")
      ->check(CLI::IsMember({"exterior", "connection", "both"}));

  auto* derive = app.add_subcommand("derive-sl2-equations", "the nine coefficient equations");
  int tau = 1;
  int eps = -1;
  derive->add_option("--tau", tau)->check(CLI::IsMember({1, -1}));
  derive->add_option("--eps", eps)->check(CLI::IsMember({1, -1}));

  auto* solve = app.add_subcommand("solve-sl2", "numeric multistart sweep");
  SweepOptions sweep;
  std::optional<std::uint64_t> seed;
  solve->add_option("--starts", sweep.starts)->check(CLI::PositiveNumber);
  solve->add_option("--seed", seed);
  solve->add_option("--threads", sweep.threads, "0: hardware concurrency");
  solve->add_option("--residual-tol", sweep.residual_tol);
  solve->add_option("--orbit-tol", sweep.orbit_tol);

  auto* normal = app.add_subcommand("normal-form", "Lorentz normal form of a 3x3 matrix");
  std::vector<double> matrix;
  normal->add_option("--matrix", matrix, "9 entries, row-major")->expected(9)->required();

  auto* cat = app.add_subcommand("catalog", "list entries or export one");
  std::string cat_name;
  std::string emit_path;
  cat->add_option("name", cat_name);
  auto* emit_opt = cat->add_option("--emit", emit_path, "write the entry in the input format");
  emit_opt->needs(cat->get_option("name"));

  auto* verify = app.add_subcommand("verify-paper", "full acceptance suite");
  AcceptanceOptions acc;
  verify->add_option("--seed", acc.seed);
  verify->add_option("--starts", acc.sweep_starts);
  verify->add_option("--threads", acc.threads);

  CLI11_PARSE(app, argc, argv);

  Report report;
  try {
    if (*info) {
      report = info_src.catalog_name.empty() && info_src.input_path.empty() ? catalog_list() : info_report(info_src.load());
    } else if (*stable) {
      FormS rho = rho_text.empty() ? named_form(stable_src.load(), rho_name) : parse_form_text(rho_text, 6);
      report = stable_report(rho, stable_orientation);
    } else if (*su_build || *flags || *nk) {
      Source& src = *su_build ? su_src : *flags ? flags_src : nk_src;
      const CatalogEntry e = src.load();
      const SUStructure s = build_su_structure(e.algebra, named_form(e, omega_name), named_form(e, psi_name), orientation);
      if (*su_build) {
        report = su_report(s);
      } else if (*flags) {
        report = flags_report(e.algebra, s);
      } else {
        const NkMode m = mode == "exterior" ? NkMode::Exterior : mode == "connection" ? NkMode::Connection : NkMode::Both;
        report = nk_verify_report(e.algebra, s, m);
      }
    } else if (*derive) {
      report = derive_report(tau, eps);
    } else if (*solve) {
      if (seed) {
        sweep.seed = *seed;
      } else if (const char* env = std::getenv("NK6_SEED")) {
        sweep.seed = std::stoull(env);
      }
      report = sweep_report(numeric_uniqueness_sweep(sweep), sweep);
    } else if (*normal) {
      report = normal_form_report(matrix);
    } else if (*cat) {
      if (cat_name.empty()) {
        report = catalog_list();
      } else {
        const std::string text = emit_input(catalog(cat_name));
        if (emit_path.empty()) {
          if (!json) {
            std::cout << text;
            return 0;
          }
          report.info("catalog." + cat_name, {{"text", text}});
        } else {
          std::ofstream out(emit_path);
          out << text;
          report.check("emit", static_cast<bool>(out), {{"path", emit_path}});
        }
      }
    } else if (*verify) {
      const auto results = run_acceptance(acc);
      for (const auto& c : results) {
        report.check("criterion." + std::to_string(c.number), c.passed(),
                     {{"title", c.title}, {"seconds", format_double(c.seconds)}});
      }
      for (const auto& c : results) report.append(c.report, "c" + std::to_string(c.number));
    }
  } catch (const Error& err) {
    if (json) {
      report.check("error", false, {{"code", to_string(err.code())}, {"message", err.what()}});
    } else {
      std::cerr << "error: " << err.what() << "\n";
      return err.code() == ErrorCode::UsageError ? 2 : 1;
    }
  }
  std::cout << (json ? report.to_json() : report.to_text());
  return report.exit_code();
}
