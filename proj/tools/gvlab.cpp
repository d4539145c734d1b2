// gvlab: command-line front end for the Gruss / Gruss-Voronovskaya checks.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gvlab/harness.hpp"

namespace {

using namespace gvlab;

struct Options {
  std::string config_path;
  std::string out_dir;
  std::string format = "csv";
  std::vector<int> ns;
  std::optional<double> rho;
  std::vector<double> radii;
  std::string domain = "hypocycloid:2";
  std::string f = "exp";
  std::string g = "sin";
  std::optional<std::uint64_t> seed;
  std::optional<int> modulus_points;
  std::optional<int> modulus_steps;
  std::string family = "bernstein";
  int order = 20;
};

SweepConfig build_config(const Options& o) {
  SweepConfig cfg = o.config_path.empty() ? SweepConfig{} : load_config(o.config_path);
  if (o.seed) cfg.seed = *o.seed;
  if (o.modulus_points) cfg.modulus_grid.points = *o.modulus_points;
  if (o.modulus_steps) cfg.modulus_grid.steps = *o.modulus_steps;
  cfg.validate();
  return cfg;
}

void emit(const Options& o, const std::string& stem, const std::string& text) {
  if (o.out_dir.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::filesystem::create_directories(o.out_dir);
  const std::string path = (std::filesystem::path(o.out_dir) / (stem + "." + (o.format == "json" ? "json" : "csv"))).string();
  write_text(path, text.back() == '\n' ? text : text + "\n");
  std::cerr << "wrote " << path << "\n";
}

std::string rows_output(const Options& o, const std::vector<ReportRow>& rows) {
  if (o.format == "json") {
    SuiteResult r;
    r.rows = rows;
    return suite_to_json(r)["rows"].dump(2);
  }
  return rows_to_csv(rows);
}

int exit_code(const std::vector<ReportRow>& rows) {
  for (const auto& r : rows)
    if (r.status == Status::fail) return 1;
  return 0;
}

int run_real_gv(const Options& o) {
  const SweepConfig cfg = build_config(o);
  const auto rows = real_gv_rows({o.f, o.g}, o.ns.empty() ? cfg.real_ns : o.ns, cfg.x_points, cfg.modulus_grid,
                                 "real-gv");
  emit(o, "real_gv", rows_output(o, rows));
  return exit_code(rows);
}

int run_paltanea_gv(const Options& o) {
  const SweepConfig cfg = build_config(o);
  std::vector<ReportRow> rows;
  const std::vector<double> rhos = o.rho ? std::vector<double>{*o.rho} : cfg.rhos;
  for (double rho : rhos) {
    const auto s = paltanea_sweep({o.f, o.g}, rho, o.ns.empty() ? cfg.real_ns : o.ns, cfg.x_points, cfg.modulus_grid,
                                  cfg.bounded_factor, "paltanea-gv");
    rows.insert(rows.end(), s.rows.begin(), s.rows.end());
  }
  emit(o, "paltanea_gv", rows_output(o, rows));
  return exit_code(rows);
}

int run_complex(const Options& o, ComplexFamily family, bool rate_check, const std::string& stem) {
  const SweepConfig cfg = build_config(o);
  const std::vector<int> ns = o.ns.empty() ? (rate_check ? cfg.rate_ns : cfg.complex_ns) : o.ns;
  const std::vector<double> radii = o.radii.empty() ? (rate_check ? std::vector<double>{cfg.rate_r} : cfg.radii) : o.radii;
  ComplexReport rep = complex_report(family, {o.f, o.g}, ns, radii);
  const auto f = catalog_lookup(o.f), g = catalog_lookup(o.g);
  const bool constant = series_of(f).is_constant() || series_of(g).is_constant();
  if (!constant && ns.size() > static_cast<std::size_t>(cfg.drop_smallest) + 1)
    rep.equivalence = equivalence_sweep(family, series_of(f), series_of(g), radii.front(), ns, cfg.drop_smallest);
  int code = 0;
  for (const auto& row : rep.rows)
    if (adjudicate(row.norm, row.bound, 1e-9 * (1.0 + row.norm)) == Status::fail) code = 1;
  if (rate_check && ns.size() >= 4) {
    std::vector<double> nd, res;
    for (const auto& row : rep.rows)
      if (row.r == radii.front()) {
        nd.push_back(row.n);
        res.push_back(row.residual);
      }
    const RateFit fit = fit_rate(nd, res, cfg.drop_smallest);
    std::cerr << "residual fitted exponent " << format_double(fit.exponent) << " (n = " << format_double(fit.n_min)
              << ".." << format_double(fit.n_max) << ")\n";
    if (!fit.identically_zero && fit.exponent > cfg.fit_exponent_max) code = 1;
  }
  if (o.format == "json") {
    emit(o, stem, complex_report_json(rep).dump(2));
  } else {
    emit(o, stem, complex_report_csv(rep));
    if (rep.equivalence) {
      const nlohmann::json summary = {{"fitted_exponent", rep.equivalence->fitted_exponent},
                                      {"K_hat", rep.equivalence->K_hat},
                                      {"floor_norm", rep.equivalence->floor_norm}};
      std::cerr << summary.dump() << "\n";
    }
  }
  return code;
}

int run_faber_basis(const Options& o) {
  const FaberBasis basis(ConformalMap::parse(o.domain), o.order);
  Options jo = o;
  jo.format = "json";
  emit(jo, "faber_basis", basis.to_json().dump(2));
  return 0;
}

int run_faber_gv(const Options& o) {
  const SweepConfig cfg = build_config(o);
  const std::vector<int> ns = o.ns.empty() ? cfg.faber_ns : o.ns;
  const auto s = faber_sweep(o.domain, {o.f, o.g}, ns, cfg.level_r, cfg.bounded_factor);
  const auto rows = faber_sweep_rows(s, "faber-gv[" + o.domain + "][" + o.f + "," + o.g + "]", cfg.level_r);
  emit(o, "faber_gv", rows_output(o, rows));
  return exit_code(rows);
}

int run_suite_cmd(const Options& o) {
  const SweepConfig cfg = build_config(o);
  const SuiteResult res = run_suite(cfg);
  emit(o, "suite", o.format == "json" ? suite_to_json(res).dump(2) : rows_to_csv(res.rows));
  for (const auto& v : res.verdicts)
    std::cerr << v.criterion << ": " << to_string(v.status) << " (measured " << format_double(v.measured) << ", bound "
              << format_double(v.bound) << ") " << v.note << "\n";
  if (!o.out_dir.empty()) {
    Options so = o;
    so.format = "json";
    emit(so, "summary", suite_summary(res).dump(2));
  }
  return res.any_failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gruss and Gruss-Voronovskaya checks for Bernstein-type operators"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "JSON config (empty document = defaults)")->check(CLI::ExistingFile);
    sub->add_option("--out", o.out_dir, "output directory (default: stdout)");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--n", o.ns, "degrees, e.g. 4,8,16")->delimiter(',');
    sub->add_option("--rho", o.rho, "Paltanea parameter");
    sub->add_option("--r", o.radii, "disk radii, e.g. 1,1.5")->delimiter(',');
    sub->add_option("--domain", o.domain, "hypocycloid:m | star:m | lemniscate:m | semidisk | disk");
    sub->add_option("--f", o.f, "catalog function f");
    sub->add_option("--g", o.g, "catalog function g");
    sub->add_option("--seed", o.seed, "seed for sampled points");
    sub->add_option("--modulus-grid", o.modulus_points, "x-grid points for moduli");
    sub->add_option("--modulus-steps", o.modulus_steps, "step sizes per delta for moduli");
  };

  auto* real_gv = app.add_subcommand("real-gv", "n|G_n(f,g;x)| for B_n against the C^2 bound");
  auto* paltanea_gv = app.add_subcommand("paltanea-gv", "bounded-ratio sweep for U_n^rho");
  auto* complex_gruss = app.add_subcommand("complex-gruss", "complex Bernstein Gruss norms and bounds");
  auto* complex_gv = app.add_subcommand("complex-gv", "complex Gruss-Voronovskaya residual rates");
  auto* durrmeyer_gruss = app.add_subcommand("durrmeyer-gruss", "complex genuine Durrmeyer Gruss norms and bounds");
  auto* faber_basis_cmd = app.add_subcommand("faber-basis", "monomial coefficients of F_0..F_M as JSON");
  auto* faber_gv = app.add_subcommand("faber-gv", "Bernstein-Faber Gruss and Gruss-Voronovskaya sweeps");
  auto* suite = app.add_subcommand("suite", "run the acceptance suite");
  for (auto* sub : {real_gv, paltanea_gv, complex_gruss, complex_gv, durrmeyer_gruss, faber_basis_cmd, faber_gv, suite})
    common(sub);
  complex_gv->add_option("--family", o.family, "bernstein or durrmeyer")->check(CLI::IsMember({"bernstein", "durrmeyer"}));
  faber_basis_cmd->add_option("--order", o.order, "highest Faber index M")->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*real_gv) return run_real_gv(o);
    if (*paltanea_gv) return run_paltanea_gv(o);
    if (*complex_gruss) return run_complex(o, ComplexFamily::bernstein, false, "complex_gruss");
    if (*complex_gv)
      return run_complex(o, o.family == "durrmeyer" ? ComplexFamily::durrmeyer : ComplexFamily::bernstein, true,
                         "complex_gv");
    if (*durrmeyer_gruss) return run_complex(o, ComplexFamily::durrmeyer, false, "durrmeyer_gruss");
    if (*faber_basis_cmd) return run_faber_basis(o);
    if (*faber_gv) return run_faber_gv(o);
    if (*suite) return run_suite_cmd(o);
  } catch (const std::exception& e) {
    std::cerr << "gvlab: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
