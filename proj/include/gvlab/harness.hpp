#pragma once

// Sweep configuration, verdicts, report emission and the acceptance suite.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gvlab/complex_ops.hpp"
#include "gvlab/exact.hpp"
#include "gvlab/faber.hpp"
#include "gvlab/funcs.hpp"
#include "gvlab/moduli.hpp"
#include "gvlab/rates.hpp"
#include "gvlab/real_ops.hpp"

namespace gvlab {

using Pair = std::pair<std::string, std::string>;

inline std::vector<int> powers_of_two(int lo, int hi) {
  std::vector<int> out;
  for (int n = lo; n <= hi; n *= 2) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------
// Configuration

struct SweepConfig {
  std::vector<int> criteria{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};

  // real operators
  int identity_max_n = 50;
  int identity_x_points = 11;
  std::vector<double> moment_rhos{0.5, 1.0, 2.0, 5.0};
  int moment_max_n = 64;
  std::vector<Pair> real_pairs{{"exp", "sin"}, {"e2", "e3"}, {"exp", "exp"}};
  std::vector<int> real_ns = powers_of_two(4, 256);
  int x_points = 21;
  std::vector<double> rhos{1.0, 10.0, 100.0};
  double rho_limit = 1000.0;
  int rho_limit_max_n = 32;
  std::vector<std::string> limit_functions{"exp", "sin", "cos", "e1", "e2", "e3", "geom:4"};
  ModulusGrid modulus_grid{};

  // complex operators
  std::vector<std::string> complex_functions{"exp", "sin", "cos", "e1", "e2", "e3", "geom:4", "poly:[0.5]"};
  std::vector<int> complex_ns = powers_of_two(4, 256);
  std::vector<double> radii{1.0, 1.25, 1.5};
  std::vector<Pair> rate_pairs{{"exp", "sin"}, {"e2", "e3"}};
  std::vector<int> rate_ns = powers_of_two(8, 512);
  double rate_r = 1.25;
  Pair equivalence_pair{"exp", "sin"};
  Pair degenerate_pair{"e1", "e2"};
  double fit_exponent_max = -1.8;
  double equivalence_lo = -1.15;
  double equivalence_hi = -0.85;

  // Faber
  std::vector<std::string> faber_maps{"hypocycloid:2", "hypocycloid:3", "star:2", "lemniscate:2", "semidisk"};
  int faber_order = 20;
  std::vector<std::string> disk_functions{"exp", "sin", "cos", "e2", "e3", "geom:4"};
  int disk_max_n = 32;
  int disk_samples = 100;
  std::string faber_sweep_map = "hypocycloid:2";
  std::vector<Pair> faber_pairs{{"e1", "e2"}, {"e2", "e2"}};
  std::vector<int> faber_ns = powers_of_two(4, 128);
  double level_r = 1.2;
  std::vector<Pair> crosscheck_pairs{{"exp", "sin"}, {"e1", "e2"}, {"e2", "e3"}};

  // adjudication
  double bounded_factor = 1.05;
  int drop_smallest = 2;
  std::uint64_t seed = 20240601;

  void validate() const {
    auto check_ns = [](const std::vector<int>& ns, const char* what, std::size_t min_len) {
      if (ns.size() < min_len) throw invalid_input(std::string(what) + ": need at least " + std::to_string(min_len) + " values");
      for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < 1) throw invalid_input(std::string(what) + ": n must be >= 1");
        if (i > 0 && ns[i] <= ns[i - 1]) throw invalid_input(std::string(what) + ": n list must be strictly increasing");
      }
    };
    check_ns(real_ns, "real_ns", 2);
    check_ns(complex_ns, "complex_ns", 1);
    check_ns(rate_ns, "rate_ns", 4);
    check_ns(faber_ns, "faber_ns", 2);
    for (int c : criteria)
      if (c < 1 || c > 12) throw invalid_input("criteria: ids run from 1 to 12");
    if (x_points < 2 || identity_x_points < 2) throw invalid_input("x_points: need at least 2");
    if (!(bounded_factor > 0.0)) throw invalid_input("bounded_factor must be positive");
    if (drop_smallest < 0) throw invalid_input("drop_smallest must be nonnegative");
    if (modulus_grid.points < 2 || modulus_grid.steps < 1) throw invalid_input("modulus grid too small");
    for (double r : radii)
      if (!(r >= 1.0)) throw invalid_input("radii must be >= 1");
    if (!(level_r > 1.0)) throw invalid_input("level_r must exceed 1");
  }
};

namespace detail {

template <class T>
void read_field(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

inline void read_pairs(const nlohmann::json& j, const char* key, std::vector<Pair>& out) {
  if (!j.contains(key)) return;
  out.clear();
  for (const auto& p : j.at(key)) {
    if (!p.is_array() || p.size() != 2) throw invalid_input(std::string(key) + ": pairs are [f, g] arrays");
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
}

inline void read_pair(const nlohmann::json& j, const char* key, Pair& out) {
  if (!j.contains(key)) return;
  const auto& p = j.at(key);
  if (!p.is_array() || p.size() != 2) throw invalid_input(std::string(key) + ": expected [f, g]");
  out = {p[0].get<std::string>(), p[1].get<std::string>()};
}

}  // namespace detail

/// Parse a JSON config; missing keys keep their defaults, unknown keys are rejected.
inline SweepConfig config_from_json(const nlohmann::json& j) {
  static const std::vector<std::string> known{
      "criteria", "identity_max_n", "identity_x_points", "moment_rhos", "moment_max_n", "real_pairs", "real_ns",
      "x_points", "rhos", "rho_limit", "rho_limit_max_n", "limit_functions", "modulus_points", "modulus_steps",
      "complex_functions", "complex_ns", "radii", "rate_pairs", "rate_ns", "rate_r", "equivalence_pair",
      "degenerate_pair", "fit_exponent_max", "equivalence_lo", "equivalence_hi", "faber_maps", "faber_order",
      "disk_functions", "disk_max_n", "disk_samples", "faber_sweep_map", "faber_pairs", "faber_ns", "level_r",
      "crosscheck_pairs", "bounded_factor", "drop_smallest", "seed"};
  if (!j.is_object()) throw invalid_input("config: expected a JSON object");
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) throw invalid_input("config: unknown key '" + key + "'");
  SweepConfig c;
  try {
    detail::read_field(j, "criteria", c.criteria);
    detail::read_field(j, "identity_max_n", c.identity_max_n);
    detail::read_field(j, "identity_x_points", c.identity_x_points);
    detail::read_field(j, "moment_rhos", c.moment_rhos);
    detail::read_field(j, "moment_max_n", c.moment_max_n);
    detail::read_pairs(j, "real_pairs", c.real_pairs);
    detail::read_field(j, "real_ns", c.real_ns);
    detail::read_field(j, "x_points", c.x_points);
    detail::read_field(j, "rhos", c.rhos);
    detail::read_field(j, "rho_limit", c.rho_limit);
    detail::read_field(j, "rho_limit_max_n", c.rho_limit_max_n);
    detail::read_field(j, "limit_functions", c.limit_functions);
    detail::read_field(j, "modulus_points", c.modulus_grid.points);
    detail::read_field(j, "modulus_steps", c.modulus_grid.steps);
    detail::read_field(j, "complex_functions", c.complex_functions);
    detail::read_field(j, "complex_ns", c.complex_ns);
    detail::read_field(j, "radii", c.radii);
    detail::read_pairs(j, "rate_pairs", c.rate_pairs);
    detail::read_field(j, "rate_ns", c.rate_ns);
    detail::read_field(j, "rate_r", c.rate_r);
    detail::read_pair(j, "equivalence_pair", c.equivalence_pair);
    detail::read_pair(j, "degenerate_pair", c.degenerate_pair);
    detail::read_field(j, "fit_exponent_max", c.fit_exponent_max);
    detail::read_field(j, "equivalence_lo", c.equivalence_lo);
    detail::read_field(j, "equivalence_hi", c.equivalence_hi);
    detail::read_field(j, "faber_maps", c.faber_maps);
    detail::read_field(j, "faber_order", c.faber_order);
    detail::read_field(j, "disk_functions", c.disk_functions);
    detail::read_field(j, "disk_max_n", c.disk_max_n);
    detail::read_field(j, "disk_samples", c.disk_samples);
    detail::read_field(j, "faber_sweep_map", c.faber_sweep_map);
    detail::read_pairs(j, "faber_pairs", c.faber_pairs);
    detail::read_field(j, "faber_ns", c.faber_ns);
    detail::read_field(j, "level_r", c.level_r);
    detail::read_pairs(j, "crosscheck_pairs", c.crosscheck_pairs);
    detail::read_field(j, "bounded_factor", c.bounded_factor);
    detail::read_field(j, "drop_smallest", c.drop_smallest);
    detail::read_field(j, "seed", c.seed);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

inline SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};
  try {
    return config_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input("config '" + path + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Verdicts and report rows

enum class Status { pass, fail, inconclusive, info };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::info: return "info";
  }
  return "?";
}

/// One-sided adjudication of measured <= bound with a disclosed slack.
inline Status adjudicate(double measured, double bound, double slack = 0.0) {
  if (measured <= bound) return Status::pass;
  if (measured <= bound + slack) return Status::inconclusive;
  return Status::fail;
}

struct Verdict {
  std::string criterion;
  Status status = Status::pass;
  double measured = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  std::string note;
};

struct ReportRow {
  std::string criterion;
  int n = 0;
  double x_or_r = 0.0;
  double measured = 0.0;
  double bound = 0.0;
  Status status = Status::info;
};

struct SuiteResult {
  std::vector<Verdict> verdicts;
  std::vector<ReportRow> rows;

  int count(Status s) const {
    return static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(), [s](const Verdict& v) { return v.status == s; }));
  }
  bool any_failed() const { return count(Status::fail) > 0; }
};

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// measured/bound, or "n/a" when the bound vanishes (0/0 at interval endpoints).
inline std::string format_ratio(double measured, double bound) {
  if (bound == 0.0) return "n/a";
  return format_double(measured / bound);
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::string out = "criterion,n,x_or_r,measured,bound,ratio,status\n";
  for (const auto& r : rows) {
    out += csv_escape(r.criterion) + "," + std::to_string(r.n) + "," + format_double(r.x_or_r) + "," +
           format_double(r.measured) + "," + format_double(r.bound) + "," + format_ratio(r.measured, r.bound) + "," +
           to_string(r.status) + "\n";
  }
  return out;
}

inline nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

inline nlohmann::json verdict_to_json(const Verdict& v) {
  return {{"criterion", v.criterion}, {"status", to_string(v.status)}, {"measured", json_number(v.measured)},
          {"bound", json_number(v.bound)}, {"slack", json_number(v.slack)}, {"note", v.note}};
}

inline nlohmann::json suite_to_json(const SuiteResult& res, bool include_rows = true) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : res.verdicts) verdicts.push_back(verdict_to_json(v));
  nlohmann::json out = {{"verdicts", verdicts},
                        {"counts",
                         {{"pass", res.count(Status::pass)},
                          {"fail", res.count(Status::fail)},
                          {"inconclusive", res.count(Status::inconclusive)},
                          {"info", res.count(Status::info)}}}};
  if (include_rows) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : res.rows)
      rows.push_back({{"criterion", r.criterion}, {"n", r.n}, {"x_or_r", json_number(r.x_or_r)},
                      {"measured", json_number(r.measured)}, {"bound", json_number(r.bound)},
                      {"ratio", r.bound == 0.0 ? nlohmann::json("n/a") : json_number(r.measured / r.bound)},
                      {"status", to_string(r.status)}});
    out["rows"] = rows;
  }
  return out;
}

/// Verdict counts per criterion; the committed golden summary of the default suite.
inline nlohmann::json suite_summary(const SuiteResult& res) {
  nlohmann::json s = nlohmann::json::object();
  for (const auto& v : res.verdicts) s[v.criterion] = to_string(v.status);
  return {{"verdicts", s},
          {"counts",
           {{"pass", res.count(Status::pass)},
            {"fail", res.count(Status::fail)},
            {"inconclusive", res.count(Status::inconclusive)}}}};
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

// ---------------------------------------------------------------------------
// Shared evaluators

inline std::vector<double> unit_grid(int points) {
  std::vector<double> x(points);
  for (int i = 0; i < points; ++i) x[i] = static_cast<double>(i) / (points - 1);
  return x;
}

inline ExactPolynomial exact_from_series(const PowerSeries& ps) {
  if (!ps.is_exact()) throw invalid_input("exact_from_series: series is not an exact polynomial");
  std::vector<rational> c;
  for (const auto& v : ps.coeffs()) {
    if (v.imag() != 0.0) throw invalid_input("exact_from_series: complex coefficient");
    c.push_back(to_rational(v.real()));
  }
  return ExactPolynomial(std::move(c));
}

/// T(f,g;x) and the Gruss-Voronovskaya functional G for a real operator. Exact
/// polynomial pairs go through rational monomial images; otherwise node functionals.
class RealPair {
 public:
  RealPair(const OperatorSpec& spec, const FunctionCatalogEntry& f, const FunctionCatalogEntry& g)
      : spec_(spec), f_(f.as_smooth), g_(g.as_smooth) {
    spec.validate();
    if (f.as_series && g.as_series && f.as_series->is_exact() && g.as_series->is_exact()) {
      const ExactPolynomial pf = exact_from_series(*f.as_series);
      const ExactPolynomial pg = exact_from_series(*g.as_series);
      auto image = [&](const ExactPolynomial& p) {
        return spec.family == Family::bernstein ? bernstein_image(spec.n, p)
                                                : paltanea_image(spec.n, to_rational(spec.effective_rho()), p);
      };
      const ExactPolynomial t = image(pf * pg) - image(pf) * image(pg);
      const rational rho = to_rational(spec.effective_rho());
      const rational c = spec.family == Family::bernstein ? rational(1) : (rho + 1) / rho;
      const ExactPolynomial X(std::vector<rational>{rational(0), rational(1), rational(-1)});
      exact_t_ = t;
      exact_g_ = t - X * pf.derivative() * pg.derivative() * (c / spec.n);
    } else {
      ev_.emplace(spec, [this](double t) { return f_(t); }, [this](double t) { return g_(t); });
    }
  }

  bool exact() const { return exact_t_.has_value(); }

  double gruss(double x) const { return exact() ? static_cast<double>((*exact_t_)(to_rational(x))) : ev_->gruss(x); }

  double gv(double x) const {
    if (exact()) return static_cast<double>((*exact_g_)(to_rational(x)));
    return gv_functional(spec_, *ev_, f_, g_, x);
  }

  bool converged() const { return exact() || ev_->converged(); }

 private:
  OperatorSpec spec_;
  SmoothFunction f_, g_;
  std::optional<ExactPolynomial> exact_t_, exact_g_;
  std::optional<GrussEvaluator> ev_;
};

inline std::string pair_label(const Pair& p) { return "[" + p.first + "," + p.second + "]"; }

inline const PowerSeries& series_of(const FunctionCatalogEntry& e) {
  if (!e.as_series) throw invalid_input("function '" + e.name + "' has no power series");
  return *e.as_series;
}

// ---------------------------------------------------------------------------
// Report producers shared by the suite and the CLI

/// n |G_n(f,g;x)| against the C^2 bound, per (n, x).
inline std::vector<ReportRow> real_gv_rows(const Pair& pair, const std::vector<int>& ns, int x_points,
                                           ModulusGrid grid, const std::string& tag) {
  const auto f = catalog_lookup(pair.first), g = catalog_lookup(pair.second);
  const C2GvBound bound(f.as_smooth, g.as_smooth, grid.points);
  std::vector<ReportRow> rows;
  for (int n : ns) {
    const RealPair rp(OperatorSpec::bernstein(n), f, g);
    for (double x : unit_grid(x_points)) {
      const BoundValue b = bound(n, x);
      const double m = n * std::abs(rp.gv(x));
      rows.push_back({tag + pair_label(pair), n, x, m, b.value, adjudicate(m, b.value, b.slack)});
    }
  }
  return rows;
}

struct PaltaneaSweep {
  std::vector<ReportRow> rows;  // sup over interior x of n |G| / (x(1-x) bracket), per n
  BoundedSweep bounded;
};

inline PaltaneaSweep paltanea_sweep(const Pair& pair, double rho, const std::vector<int>& ns, int x_points,
                                    ModulusGrid grid, double factor, const std::string& tag) {
  const auto f = catalog_lookup(pair.first), g = catalog_lookup(pair.second);
  PaltaneaSweep out;
  std::vector<double> nd, ratios;
  for (int n : ns) {
    const RealPair rp(OperatorSpec::paltanea(n, rho), f, g);
    if (!rp.converged()) throw std::runtime_error("Paltanea quadrature did not converge at n = " + std::to_string(n));
    const double bracket = gv_bracket_paltanea(f.as_smooth, g.as_smooth, n, rho, grid);
    double worst = 0.0;
    for (double x : unit_grid(x_points)) {
      if (x == 0.0 || x == 1.0) continue;
      worst = std::max(worst, n * std::abs(rp.gv(x)) / (x * (1.0 - x) * bracket));
    }
    nd.push_back(n);
    ratios.push_back(worst);
  }
  out.bounded = bounded_sweep(nd, ratios, factor);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const bool upper = nd[i] > out.bounded.split_n;
    // Upper-half values are compared with factor * lower max; lower-half rows are the reference.
    out.rows.push_back({tag + pair_label(pair) + "[rho=" + format_double(rho) + "]", ns[i], 0.0, ratios[i],
                        upper ? factor * out.bounded.lower_max : out.bounded.lower_max,
                        upper ? (ratios[i] <= factor * out.bounded.lower_max ? Status::pass : Status::fail)
                              : Status::info});
  }
  return out;
}

struct ComplexReportRow {
  int n = 0;
  double r = 0.0;
  double norm = 0.0;
  double bound = 0.0;
  double residual = 0.0;
};

struct ComplexReport {
  ComplexFamily family = ComplexFamily::bernstein;
  Pair pair;
  std::vector<ComplexReportRow> rows;
  std::optional<EquivalenceReport> equivalence;
};

inline ComplexReport complex_report(ComplexFamily family, const Pair& pair, const std::vector<int>& ns,
                                    const std::vector<double>& radii) {
  const auto f = catalog_lookup(pair.first), g = catalog_lookup(pair.second);
  const PowerSeries& fs = series_of(f);
  const PowerSeries& gs = series_of(g);
  ComplexReport rep;
  rep.family = family;
  rep.pair = pair;
  for (double r : radii) {
    check_working_radius(r, fs, gs);
    for (int n : ns) {
      const ComplexGruss cg(family, fs, gs, n);
      ComplexReportRow row;
      row.n = n;
      row.r = r;
      row.norm = sup_norm_disk([&](cplx z) { return cg.gruss(z); }, r).value;
      row.residual = sup_norm_disk([&](cplx z) { return cg.gv(z); }, r).value;
      row.bound = gruss_bound(family, fs, gs, n, r);
      rep.rows.push_back(row);
    }
  }
  return rep;
}

inline std::string complex_report_csv(const ComplexReport& rep) {
  std::string out = "n,r,norm,bound,ratio,residual,n2_residual\n";
  for (const auto& row : rep.rows)
    out += std::to_string(row.n) + "," + format_double(row.r) + "," + format_double(row.norm) + "," +
           format_double(row.bound) + "," + format_ratio(row.norm, row.bound) + "," + format_double(row.residual) + "," +
           format_double(static_cast<double>(row.n) * row.n * row.residual) + "\n";
  return out;
}

inline nlohmann::json complex_report_json(const ComplexReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rep.rows)
    rows.push_back({{"n", row.n}, {"r", row.r}, {"norm", row.norm}, {"bound", row.bound},
                    {"ratio", row.bound == 0.0 ? nlohmann::json("n/a") : nlohmann::json(row.norm / row.bound)},
                    {"residual", row.residual}, {"n2_residual", static_cast<double>(row.n) * row.n * row.residual}});
  nlohmann::json out = {{"family", to_string(rep.family)}, {"f", rep.pair.first}, {"g", rep.pair.second}, {"rows", rows}};
  if (rep.equivalence) {
    const auto& e = *rep.equivalence;
    out["ns"] = e.ns;
    out["norms"] = e.norms;
    out["fitted_exponent"] = e.fitted_exponent;
    out["fit_n_min"] = e.fit.n_min;
    out["fit_n_max"] = e.fit.n_max;
    out["K_hat"] = e.K_hat;
    out["floor_norm"] = e.floor_norm;
    out["degenerate"] = e.degenerate;
  }
  return out;
}

struct FaberSweep {
  std::vector<double> ns, gruss_scaled, residual_scaled;  // n |T_n| and n^2 |T_n - correction|
  BoundedSweep gruss_bounded, residual_bounded;
};

inline FaberSweep faber_sweep(const std::string& domain, const Pair& pair, const std::vector<int>& ns, double level_r,
                              double factor) {
  const ConformalMap map = ConformalMap::parse(domain);
  const auto f = catalog_lookup(pair.first), g = catalog_lookup(pair.second);
  const FaberGruss fg(series_of(f), series_of(g), map);
  const auto zs = level_curve_points(map, level_r);
  FaberSweep out;
  for (int n : ns) {
    out.ns.push_back(n);
    out.gruss_scaled.push_back(n * gruss_faber(fg, n, zs));
    out.residual_scaled.push_back(static_cast<double>(n) * n * gv_residual_faber(fg, n, zs));
  }
  out.gruss_bounded = bounded_sweep(out.ns, out.gruss_scaled, factor);
  out.residual_bounded = bounded_sweep(out.ns, out.residual_scaled, factor);
  return out;
}

inline std::vector<ReportRow> faber_sweep_rows(const FaberSweep& s, const std::string& tag, double level_r) {
  std::vector<ReportRow> rows;
  auto add = [&](const std::string& what, const std::vector<double>& v, const BoundedSweep& b) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const bool upper = s.ns[i] > b.split_n;
      rows.push_back({tag + "[" + what + "]", static_cast<int>(s.ns[i]), level_r, v[i],
                      upper ? b.factor * b.lower_max : b.lower_max,
                      upper ? (v[i] <= b.factor * b.lower_max ? Status::pass : Status::fail) : Status::info});
    }
  };
  add("n*gruss", s.gruss_scaled, s.gruss_bounded);
  add("n2*residual", s.residual_scaled, s.residual_bounded);
  return rows;
}

// ---------------------------------------------------------------------------
// Criteria

namespace detail {

struct CriterionOut {
  Verdict verdict;
  std::vector<ReportRow> rows;
};

inline Verdict worst_of(const std::string& id, const std::vector<ReportRow>& rows, const std::string& note) {
  Verdict v{id, Status::pass, 0.0, 0.0, 0.0, note};
  double worst_ratio = -kInf;
  for (const auto& r : rows) {
    if (r.status == Status::fail) v.status = Status::fail;
    else if (r.status == Status::inconclusive && v.status == Status::pass) v.status = Status::inconclusive;
    const double ratio = r.bound > 0.0 ? r.measured / r.bound : (r.measured > 0.0 ? kInf : 0.0);
    if (r.status != Status::info && ratio > worst_ratio) {
      worst_ratio = ratio;
      v.measured = r.measured;
      v.bound = r.bound;
    }
  }
  return v;
}

// 1: the Gruss-Voronovskaya functional of (e1, e2) under B_n is x(1-x)(1-2x)/n^2.
inline CriterionOut gv_identity(const SweepConfig& cfg) {
  CriterionOut out;
  const ExactPolynomial e1 = ExactPolynomial::monomial(1), e2 = ExactPolynomial::monomial(2);
  const ExactPolynomial X(std::vector<rational>{rational(0), rational(1), rational(-1)});
  const ExactPolynomial one_minus_2x(std::vector<rational>{rational(1), rational(-2)});
  bool exact_ok = true;
  double worst = 0.0;
  for (int n = 1; n <= cfg.identity_max_n; ++n) {
    const ExactPolynomial t = bernstein_image(n, e1 * e2) - bernstein_image(n, e1) * bernstein_image(n, e2);
    const ExactPolynomial g = t - X * e1.derivative() * e2.derivative() * rational(1, n);
    const ExactPolynomial want_g = X * one_minus_2x * rational(1, n * n);
    const ExactPolynomial want_t = X * e1 * rational(2, n) + want_g;
    exact_ok = exact_ok && g == want_g && t == want_t;
    const OperatorSpec spec = OperatorSpec::bernstein(n);
    const GrussEvaluator ev(spec, [](double x) { return x; }, [](double x) { return x * x; });
    const SmoothFunction f = catalog_lookup("e1").as_smooth, gg = catalog_lookup("e2").as_smooth;
    double row_worst = 0.0;
    for (double x : unit_grid(cfg.identity_x_points)) {
      const double closed = x * (1.0 - x) * (1.0 - 2.0 * x) / (static_cast<double>(n) * n);
      row_worst = std::max(row_worst, std::abs(gv_functional(spec, ev, f, gg, x) - closed));
      row_worst = std::max(row_worst, std::abs(ev.gruss(x) - (2.0 * x * x * (1.0 - x) / n + closed)));
    }
    worst = std::max(worst, row_worst);
    out.rows.push_back({"1-gv-identity[e1,e2]", n, 0.0, row_worst, 1e-13, adjudicate(row_worst, 1e-13)});
  }
  out.verdict = {"1-gv-identity", exact_ok && worst <= 1e-13 ? Status::pass : Status::fail, worst, 1e-13, 0.0,
                 std::string("rational path ") + (exact_ok ? "exact (error 0)" : "MISMATCH") +
                     "; floating path max error over n <= " + std::to_string(cfg.identity_max_n)};
  return out;
}

// 2: monomial images and the Paltanea second central moment.
inline CriterionOut monomial_images(const SweepConfig& cfg) {
  CriterionOut out;
  bool exact_ok = true;
  const ExactPolynomial x = ExactPolynomial::monomial(1);
  const ExactPolynomial X(std::vector<rational>{rational(0), rational(1), rational(-1)});
  const ExactPolynomial one_minus_2x(std::vector<rational>{rational(1), rational(-2)});
  for (int n = 1; n <= cfg.identity_max_n; ++n) {
    const ExactPolynomial b2 = ExactPolynomial::monomial(2) + X * rational(1, n);
    const ExactPolynomial b3 =
        ExactPolynomial::monomial(3) + x * X * rational(3, n) + X * one_minus_2x * rational(1, n * n);
    const auto imgs = bernstein_monomial_images(n, 3);
    bool ok = imgs[2] == b2 && imgs[3] == b3;
    for (int k = 0; k <= 3; ++k)
      for (int p = 0; p <= k; ++p) ok = ok && forward_difference_coefficient(n, p, k) == imgs[k].coeff(p);
    exact_ok = exact_ok && ok;
    out.rows.push_back({"2-monomial-images[exact]", n, 0.0, ok ? 0.0 : 1.0, 0.0, ok ? Status::pass : Status::fail});
  }
  double worst = 0.0;
  for (double rho : cfg.moment_rhos) {
    double rho_worst = 0.0;
    for (int n = 1; n <= cfg.moment_max_n; ++n)
      for (double xv : unit_grid(11)) {
        const double want = (rho + 1.0) * xv * (1.0 - xv) / (n * rho + 1.0);
        rho_worst = std::max(rho_worst, std::abs(paltanea_central_moment(n, rho, 2, xv) - want));
      }
    worst = std::max(worst, rho_worst);
    out.rows.push_back({"2-second-moment[rho=" + format_double(rho) + "]", cfg.moment_max_n, 0.0, rho_worst, 1e-12,
                        adjudicate(rho_worst, 1e-12)});
  }
  out.verdict = {"2-monomial-images", exact_ok && worst <= 1e-12 ? Status::pass : Status::fail, worst, 1e-12, 0.0,
                 std::string("B_n(e2), B_n(e3) ") + (exact_ok ? "exact" : "MISMATCH") +
                     "; second-moment max error shown"};
  return out;
}

// 3: n |G_n| <= C^2 bound.
inline CriterionOut c2_bound(const SweepConfig& cfg) {
  CriterionOut out;
  for (const auto& p : cfg.real_pairs) {
    auto rows = real_gv_rows(p, cfg.real_ns, cfg.x_points, cfg.modulus_grid, "3-c2-gv-bound");
    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
  }
  out.verdict = worst_of("3-c2-gv-bound", out.rows, "largest measured/bound ratio shown");
  const auto inc = std::count_if(out.rows.begin(), out.rows.end(), [](const ReportRow& r) { return r.status == Status::inconclusive; });
  out.verdict.note += "; inconclusive rows: " + std::to_string(inc);
  return out;
}

// 4: |n(B_n f - f) - x(1-x) f''/2| <= x(1-x) omega_1(f''; sqrt(2/n)).
inline CriterionOut voronovskaya(const SweepConfig& cfg) {
  CriterionOut out;
  std::vector<std::string> fns;
  for (const auto& p : cfg.real_pairs)
    for (const auto& name : {p.first, p.second})
      if (std::find(fns.begin(), fns.end(), name) == fns.end()) fns.push_back(name);
  ModulusGrid fine = cfg.modulus_grid;
  fine.points = 2 * (fine.points - 1) + 1;
  for (const auto& name : fns) {
    const auto e = catalog_lookup(name);
    const SmoothFunction& f = e.as_smooth;
    const auto f2 = f.derivative_fn(2);
    for (int n : cfg.real_ns) {
      const double delta = std::min(1.0, std::sqrt(2.0 / n));
      const double w = modulus(f2, 1, delta, cfg.modulus_grid);
      const double w_fine = modulus(f2, 1, delta, fine);
      const double slack = std::abs(w_fine - w);
      std::optional<ExactPolynomial> img, pf;
      if (e.as_series && e.as_series->is_exact()) {
        pf = exact_from_series(*e.as_series);
        img = bernstein_image(n, *pf);
      }
      for (double x : unit_grid(cfg.x_points)) {
        const double X = x * (1.0 - x);
        double res;
        if (img) {
          const rational xr = to_rational(x);
          const rational exact = rational(n) * ((*img)(xr) - (*pf)(xr)) -
                                 xr * (1 - xr) * pf->derivative().derivative()(xr) / 2;
          res = std::abs(static_cast<double>(exact));
        } else {
          res = std::abs(n * (bernstein_eval(f, n, x) - f(x)) - 0.5 * X * f.derivative(2, x));
        }
        out.rows.push_back({"4-voronovskaya-bound[" + name + "]", n, x, res, X * w, adjudicate(res, X * w, X * slack)});
      }
    }
  }
  out.verdict = worst_of("4-voronovskaya-bound", out.rows, "largest measured/bound ratio shown");
  return out;
}

// 5: bounded ratio sweep for U_n^rho and the rho -> infinity limit.
inline CriterionOut paltanea_bounded(const SweepConfig& cfg) {
  CriterionOut out;
  bool ok = true;
  double worst_excess = 0.0;
  std::string note;
  for (double rho : cfg.rhos)
    for (const auto& p : cfg.real_pairs) {
      const auto s = paltanea_sweep(p, rho, cfg.real_ns, cfg.x_points, cfg.modulus_grid, cfg.bounded_factor,
                                    "5-paltanea-bounded");
      out.rows.insert(out.rows.end(), s.rows.begin(), s.rows.end());
      ok = ok && s.bounded.bounded;
      const double excess = s.bounded.upper_max / s.bounded.lower_max;
      if (excess > worst_excess) {
        worst_excess = excess;
        note = "worst upper/lower max " + format_double(excess) + " at rho=" + format_double(rho) + " " + pair_label(p);
      }
    }
  double limit_worst = 0.0;
  for (const auto& name : cfg.limit_functions) {
    const auto e = catalog_lookup(name);
    const double fnorm = sup_norm_01(e.as_smooth.derivative_fn(0)).value;
    const RealFn f = [&](double t) { return e.as_smooth(t); };
    for (int n = 1; n <= cfg.rho_limit_max_n; ++n) {
      const NodeValues nv = paltanea_nodes(f, n, cfg.rho_limit);
      double gap = 0.0;
      for (double x : unit_grid(cfg.x_points)) gap = std::max(gap, std::abs(apply_nodes(nv, x) - bernstein_eval(f, n, x)));
      limit_worst = std::max(limit_worst, gap / std::max(fnorm, 1e-300));
      out.rows.push_back({"5-rho-limit[" + name + "]", n, cfg.rho_limit, gap, 1e-2 * fnorm,
                          adjudicate(gap, 1e-2 * fnorm)});
      ok = ok && gap <= 1e-2 * fnorm && nv.converged;
    }
  }
  out.verdict = {"5-paltanea-bounded", ok ? Status::pass : Status::fail, worst_excess, cfg.bounded_factor, 0.0,
                 note + "; rho-limit max relative gap " + format_double(limit_worst)};
  return out;
}

inline std::vector<Pair> unordered_pairs(const std::vector<std::string>& fns) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < fns.size(); ++i)
    for (std::size_t j = i; j < fns.size(); ++j) out.emplace_back(fns[i], fns[j]);
  return out;
}

// 6: complex Gruss norms under the tail-inclusive bounds.
inline CriterionOut complex_bounds(const SweepConfig& cfg) {
  CriterionOut out;
  for (const auto family : {ComplexFamily::bernstein, ComplexFamily::durrmeyer})
    for (const auto& p : unordered_pairs(cfg.complex_functions)) {
      const auto rep = complex_report(family, p, cfg.complex_ns, cfg.radii);
      for (const auto& row : rep.rows) {
        const double slack = 1e-9 * (1.0 + row.norm);
        out.rows.push_back({"6-complex-gruss-bound[" + to_string(family) + "]" + pair_label(p), row.n, row.r, row.norm,
                            row.bound, adjudicate(row.norm, row.bound, slack)});
      }
    }
  out.verdict = worst_of("6-complex-gruss-bound", out.rows, "largest norm/bound ratio shown");
  return out;
}

// 7: C/n^2 rates of the complex Gruss-Voronovskaya residuals.
inline CriterionOut complex_rates(const SweepConfig& cfg) {
  CriterionOut out;
  bool ok = true;
  double worst_exp = -kInf;
  std::string note;
  for (const auto family : {ComplexFamily::bernstein, ComplexFamily::durrmeyer})
    for (const auto& p : cfg.rate_pairs) {
      const auto rep = complex_report(family, p, cfg.rate_ns, {cfg.rate_r});
      std::vector<double> nd, res, scaled;
      for (const auto& row : rep.rows) {
        nd.push_back(row.n);
        res.push_back(row.residual);
        scaled.push_back(static_cast<double>(row.n) * row.n * row.residual);
      }
      const RateFit fit = fit_rate(nd, res, cfg.drop_smallest);
      const BoundedSweep b = bounded_sweep(nd, scaled, cfg.bounded_factor);
      const std::string tag = "7-complex-gv-rate[" + to_string(family) + "]" + pair_label(p);
      for (std::size_t i = 0; i < nd.size(); ++i) {
        const bool upper = nd[i] > b.split_n;
        out.rows.push_back({tag + "[n2*residual]", static_cast<int>(nd[i]), cfg.rate_r, scaled[i],
                            upper ? b.factor * b.lower_max : b.lower_max,
                            upper ? (scaled[i] <= b.factor * b.lower_max ? Status::pass : Status::fail) : Status::info});
      }
      const bool fit_ok = fit.identically_zero || fit.exponent <= cfg.fit_exponent_max;
      out.rows.push_back({tag + "[fitted-exponent]", static_cast<int>(fit.n_max), cfg.rate_r, fit.exponent,
                          cfg.fit_exponent_max, fit_ok ? Status::pass : Status::fail});
      ok = ok && fit_ok && b.bounded;
      if (fit.exponent > worst_exp) {
        worst_exp = fit.exponent;
        note = "largest fitted exponent at " + to_string(family) + " " + pair_label(p) + " (n = " +
               format_double(fit.n_min) + ".." + format_double(fit.n_max) + ")";
      }
    }
  out.verdict = {"7-complex-gv-rate", ok ? Status::pass : Status::fail, worst_exp, cfg.fit_exponent_max, 0.0, note};
  return out;
}

// 8: ||T_n||_r ~ 1/n with a positive lower constant.
inline CriterionOut equivalence(const SweepConfig& cfg) {
  CriterionOut out;
  auto run = [&](const Pair& p) {
    const auto f = catalog_lookup(p.first), g = catalog_lookup(p.second);
    return equivalence_sweep(ComplexFamily::bernstein, series_of(f), series_of(g), cfg.rate_r, cfg.rate_ns,
                             cfg.drop_smallest);
  };
  const auto main = run(cfg.equivalence_pair);
  const bool ok = main.K_hat > 0.0 && main.fitted_exponent >= cfg.equivalence_lo &&
                  main.fitted_exponent <= cfg.equivalence_hi;
  for (std::size_t i = 0; i < main.ns.size(); ++i)
    out.rows.push_back({"8-equivalence" + pair_label(cfg.equivalence_pair) + "[n*norm]", main.ns[i], cfg.rate_r,
                        main.ns[i] * main.norms[i], main.K_hat, Status::info});
  out.rows.push_back({"8-equivalence" + pair_label(cfg.equivalence_pair) + "[fitted-exponent]", main.ns.back(), cfg.rate_r,
                      main.fitted_exponent, cfg.equivalence_hi, ok ? Status::pass : Status::fail});
  std::string note = "K_hat " + format_double(main.K_hat) + ", floor " + format_double(main.floor_norm);
  try {
    const auto deg = run(cfg.degenerate_pair);
    out.rows.push_back({"8-equivalence" + pair_label(cfg.degenerate_pair) + "[fitted-exponent]", deg.ns.back(),
                        cfg.rate_r, deg.fitted_exponent, cfg.equivalence_hi, Status::info});
    note += "; " + pair_label(cfg.degenerate_pair) + " exponent " + format_double(deg.fitted_exponent) +
            (deg.degenerate ? " (flagged degenerate)" : " (not degenerate: floor dominates the residual)");
  } catch (const std::exception& e) {
    note += "; " + pair_label(cfg.degenerate_pair) + " not evaluated: " + e.what();
  }
  out.verdict = {"8-equivalence", ok ? Status::pass : Status::fail, main.fitted_exponent, cfg.equivalence_hi, 0.0, note};
  return out;
}

// 9: Faber recurrence vs generating-function oracle.
inline CriterionOut faber_oracle(const SweepConfig& cfg) {
  CriterionOut out;
  bool ok = true;
  double worst = 0.0;
  std::string note;
  for (const auto& name : cfg.faber_maps) {
    try {
      const FaberBasis basis(ConformalMap::parse(name), cfg.faber_order);
      worst = std::max(worst, basis.oracle_error());
      out.rows.push_back({"9-faber-oracle[" + name + "]", cfg.faber_order, 2.0, basis.oracle_error(),
                          FaberBasis::kOracleTol, adjudicate(basis.oracle_error(), FaberBasis::kOracleTol)});
    } catch (const std::exception& e) {
      ok = false;
      note += name + ": " + e.what() + "; ";
      out.rows.push_back({"9-faber-oracle[" + name + "]", cfg.faber_order, 2.0, kInf, FaberBasis::kOracleTol, Status::fail});
    }
  }
  // The disk basis is checked coefficient-for-coefficient at construction.
  bool disk_ok = true;
  try {
    const FaberBasis disk(ConformalMap::disk(), cfg.faber_order);
    for (int p = 0; p <= cfg.faber_order; ++p)
      disk_ok = disk_ok && disk.polys()[p] == [p] {
        std::vector<cplx> c(p + 1, cplx{0.0});
        c[p] = 1.0;
        return c;
      }();
  } catch (const std::exception&) {
    disk_ok = false;
  }
  out.rows.push_back({"9-faber-oracle[disk-monomials]", cfg.faber_order, 0.0, disk_ok ? 0.0 : 1.0, 0.0,
                      disk_ok ? Status::pass : Status::fail});
  ok = ok && disk_ok && worst <= FaberBasis::kOracleTol;
  out.verdict = {"9-faber-oracle", ok ? Status::pass : Status::fail, worst, FaberBasis::kOracleTol, 0.0,
                 note.empty() ? "max relative recurrence-vs-oracle error; disk basis exactly monomial" : note};
  return out;
}

// 10: Bernstein-Faber on the disk equals complex Bernstein.
inline CriterionOut disk_reduction(const SweepConfig& cfg) {
  CriterionOut out;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<cplx> zs;
  for (int i = 0; i < cfg.disk_samples; ++i) {
    const double rad = std::sqrt(unif(rng));
    const double ang = 2.0 * std::numbers::pi * unif(rng);
    zs.push_back(std::polar(rad, ang));
  }
  const ConformalMap disk = ConformalMap::disk();
  double worst = 0.0;
  for (const auto& name : cfg.disk_functions) {
    const auto e = catalog_lookup(name);
    const PowerSeries& fs = series_of(e);
    const FaberCoefficients coeffs = faber_coefficients(fs, disk);
    const FaberBasis basis(disk, std::max(1, static_cast<int>(coeffs.a.size()) - 1));
    for (int n = 1; n <= cfg.disk_max_n; ++n) {
      double d = 0.0;
      for (const auto& z : zs)
        d = std::max(d, std::abs(bernstein_faber_eval(coeffs, basis, n, z) - cbernstein_eval(fs, n, z)));
      worst = std::max(worst, d);
      out.rows.push_back({"10-disk-reduction[" + name + "]", n, 1.0, d, 1e-10, adjudicate(d, 1e-10)});
    }
  }
  out.verdict = worst_of("10-disk-reduction", out.rows, "max |B_n(f;disk) - B_n(f)| over sampled z");
  out.verdict.measured = worst;
  return out;
}

// 11: Faber Gruss and Gruss-Voronovskaya sweeps plus the disk correction identity.
inline CriterionOut faber_gv(const SweepConfig& cfg) {
  CriterionOut out;
  bool ok = true;
  std::string note;
  for (const auto& p : cfg.faber_pairs) {
    const auto s = faber_sweep(cfg.faber_sweep_map, p, cfg.faber_ns, cfg.level_r, cfg.bounded_factor);
    const auto rows = faber_sweep_rows(s, "11-faber-gv[" + cfg.faber_sweep_map + "]" + pair_label(p), cfg.level_r);
    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
    ok = ok && s.gruss_bounded.bounded && s.residual_bounded.bounded;
    note += pair_label(p) + " upper/lower " + format_double(s.gruss_bounded.upper_max / s.gruss_bounded.lower_max) +
            ", " + format_double(s.residual_bounded.upper_max / s.residual_bounded.lower_max) + "; ";
  }
  const ConformalMap disk = ConformalMap::disk();
  const auto zs = level_curve_points(disk, cfg.level_r, 256);
  double worst = 0.0;
  for (const auto& p : cfg.crosscheck_pairs) {
    const auto f = catalog_lookup(p.first), g = catalog_lookup(p.second);
    const PowerSeries &fs = series_of(f), &gs = series_of(g);
    const FaberGruss fg(fs, gs, disk);
    const PowerSeries df = ps_derivative(fs), dg = ps_derivative(gs);
    for (int n : {4, 16, 64}) {
      const auto corr = fg.correction(n, zs);
      double d = 0.0;
      for (std::size_t i = 0; i < zs.size(); ++i) {
        const cplx z = zs[i];
        const cplx want = z * (1.0 - z) * ps_eval(df, z) * ps_eval(dg, z) / static_cast<double>(n);
        d = std::max(d, std::abs(corr[i] - want));
      }
      worst = std::max(worst, d);
      out.rows.push_back({"11-disk-correction" + pair_label(p), n, cfg.level_r, d, 1e-9, adjudicate(d, 1e-9)});
      ok = ok && d <= 1e-9;
    }
  }
  note += "disk correction max error " + format_double(worst);
  out.verdict = {"11-faber-gv", ok ? Status::pass : Status::fail, worst, 1e-9, 0.0, note};
  return out;
}

}  // namespace detail

inline SuiteResult run_suite(const SweepConfig& cfg, bool check_determinism = true);

namespace detail {

// 12: operator properties, modulus properties, report determinism.
inline CriterionOut properties(const SweepConfig& cfg, bool check_determinism) {
  CriterionOut out;
  auto add = [&](const std::string& what, int n, double x, double violation, double tol) {
    out.rows.push_back({"12-properties[" + what + "]", n, x, violation, tol, adjudicate(violation, tol)});
  };
  const std::vector<OperatorSpec> specs_proto{OperatorSpec::bernstein(1), OperatorSpec::paltanea(1, 2.0),
                                              OperatorSpec::genuine_durrmeyer(1)};
  const auto xs = unit_grid(cfg.x_points);
  const std::vector<std::string> fns{"exp", "sin", "cos", "e2", "geom:4"};
  for (const auto& proto : specs_proto)
    for (int n : {1, 2, 5, 16, 64}) {
      OperatorSpec spec = proto;
      spec.n = n;
      const std::string fam = to_string(spec.family);
      double pos = 0.0, unity = 0.0, linear = 0.0, endpoint = 0.0, contraction = 0.0;
      for (double x : xs)
        for (double w : bernstein_weights(n, x)) pos = std::max(pos, -w);
      const NodeValues one = operator_nodes(spec, [](double) { return 1.0; });
      const NodeValues lin = operator_nodes(spec, [](double t) { return t; });
      for (double x : xs) {
        unity = std::max(unity, std::abs(apply_nodes(one, x) - 1.0));
        linear = std::max(linear, std::abs(apply_nodes(lin, x) - x));
      }
      for (const auto& name : fns) {
        const auto e = catalog_lookup(name);
        const RealFn f = [&](double t) { return e.as_smooth(t); };
        const NodeValues nv = operator_nodes(spec, f);
        const double fnorm = sup_norm_01(f).value;
        double fmin = kInf;
        for (double x : unit_grid(4097)) fmin = std::min(fmin, f(x));
        endpoint = std::max({endpoint, std::abs(apply_nodes(nv, 0.0) - f(0.0)), std::abs(apply_nodes(nv, 1.0) - f(1.0))});
        for (double x : xs) {
          const double v = apply_nodes(nv, x);
          contraction = std::max(contraction, std::abs(v) - fnorm);
          if (fmin >= 0.0) pos = std::max(pos, -v);
        }
      }
      add(fam + ":positivity", n, 0.0, pos, 0.0);
      add(fam + ":partition-of-unity", n, 0.0, unity, 1e-13);
      add(fam + ":linear-preservation", n, 0.0, linear, 1e-12);
      add(fam + ":endpoint-interpolation", n, 0.0, endpoint, 1e-13);
      add(fam + ":contraction", n, 0.0, contraction, 1e-12);
    }
  for (const std::string name : {"exp", "sin", "e3", "geom:4"}) {
    const auto e = catalog_lookup(name);
    for (int p = 1; p <= 3; ++p)
      for (int d = 0; d <= 2; ++d) {
        const auto fd = e.as_smooth.derivative_fn(d);
        const ModulusTable t = modulus_table(fd, p, 513);
        double mono = 0.0;
        for (std::size_t i = 1; i < t.values.size(); ++i) mono = std::max(mono, t.values[i - 1] - t.values[i]);
        add(name + ":d" + std::to_string(d) + ":omega" + std::to_string(p) + "-monotone", p, 0.0, mono, 0.0);
        if (p != 1) continue;
        const ConcaveMajorant m = least_concave_majorant(t);
        double below = 0.0, concave = 0.0;
        for (std::size_t i = 0; i < t.deltas.size(); ++i) below = std::max(below, t.values[i] - m(t.deltas[i]));
        for (int i = 1; i < 512; ++i) {
          const double a = m((i - 1) / 512.0), b = m(i / 512.0), c = m((i + 1) / 512.0);
          concave = std::max(concave, (a + c) - 2.0 * b);
        }
        const double scale = 1e-12 * (1.0 + t.values.back());
        add(name + ":d" + std::to_string(d) + ":majorant-dominates", 1, 0.0, below, scale);
        add(name + ":d" + std::to_string(d) + ":majorant-concave", 1, 0.0, concave, scale);
      }
  }
  if (check_determinism) {
    SweepConfig small = cfg;
    small.criteria = {1, 2, 9};
    const SuiteResult a = run_suite(small, false);
    const SuiteResult b = run_suite(small, false);
    const bool same_csv = rows_to_csv(a.rows) == rows_to_csv(b.rows);
    const bool same_json = suite_to_json(a).dump(2) == suite_to_json(b).dump(2);
    add("determinism:csv", 0, 0.0, same_csv ? 0.0 : 1.0, 0.0);
    add("determinism:json", 0, 0.0, same_json ? 0.0 : 1.0, 0.0);
  }
  out.verdict = worst_of("12-properties", out.rows, "largest violation shown");
  return out;
}

}  // namespace detail

/// Criteria selected by the config, in config order. Module errors become failed verdicts.
inline SuiteResult run_suite(const SweepConfig& cfg, bool check_determinism) {
  cfg.validate();
  SuiteResult res;
  static const std::map<int, std::string> ids{
      {1, "1-gv-identity"},       {2, "2-monomial-images"},      {3, "3-c2-gv-bound"},
      {4, "4-voronovskaya-bound"}, {5, "5-paltanea-bounded"},     {6, "6-complex-gruss-bound"},
      {7, "7-complex-gv-rate"},    {8, "8-equivalence"},          {9, "9-faber-oracle"},
      {10, "10-disk-reduction"},   {11, "11-faber-gv"},           {12, "12-properties"}};
  for (int c : cfg.criteria) {
    try {
      detail::CriterionOut out;
      switch (c) {
        case 1: out = detail::gv_identity(cfg); break;
        case 2: out = detail::monomial_images(cfg); break;
        case 3: out = detail::c2_bound(cfg); break;
        case 4: out = detail::voronovskaya(cfg); break;
        case 5: out = detail::paltanea_bounded(cfg); break;
        case 6: out = detail::complex_bounds(cfg); break;
        case 7: out = detail::complex_rates(cfg); break;
        case 8: out = detail::equivalence(cfg); break;
        case 9: out = detail::faber_oracle(cfg); break;
        case 10: out = detail::disk_reduction(cfg); break;
        case 11: out = detail::faber_gv(cfg); break;
        case 12: out = detail::properties(cfg, check_determinism); break;
      }
      res.verdicts.push_back(out.verdict);
      res.rows.insert(res.rows.end(), out.rows.begin(), out.rows.end());
    } catch (const std::exception& e) {
      res.verdicts.push_back({ids.at(c), Status::fail, 0.0, 0.0, 0.0, std::string("error: ") + e.what()});
    }
  }
  return res;
}

}  // namespace gvlab
