#pragma once

// Function representations: analytic functions as truncated power series,
// real C^k functions on [0,1] as evaluator bundles, and the string-addressable
// catalog used by the CLI and the suite.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gvlab {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Thrown when an input violates an operation's precondition.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a point lies outside the region where a function may be evaluated.
class domain_violation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kSeriesTailTarget = 1e-12;

namespace detail {

// Majorant of sum_{i>=1} (M+i)^k lead q^i.
inline double geometric_tail(double lead, int M, double q, int k) {
  if (lead == 0.0) return 0.0;
  if (!(q < 1.0)) return kInf;
  double sum = 0.0;
  double term = lead;
  for (int i = 1; i < 1000000; ++i) {
    term *= q;
    const double add = term * std::pow(static_cast<double>(M + i), k);
    sum += add;
    const double growth = q * std::pow(1.0 + 1.0 / (M + i), k);
    if (growth < 1.0 && add * growth / (1.0 - growth) < 1e-17 * sum) break;
    if (add == 0.0) break;
  }
  return sum;
}

}  // namespace detail

/// Truncated power series sum_{m<=M} a_m z^m of an analytic function.
///
/// `tail_tol` bounds |f(z) - sum_{m<=M} a_m z^m| on |z| <= work_radius. Series
/// built from a Taylor truncation have the bound checked at construction with a
/// geometric tail model; exact polynomials carry zero tolerance.
class PowerSeries {
 public:
  enum class Kind { exact, taylor, derived };

  /// The zero series.
  PowerSeries() : coeffs_{cplx{0.0}}, radius_(kInf), tail_tol_(0.0), work_radius_(kInf), kind_(Kind::exact) {}

  /// Taylor truncation of a function with convergence radius `radius`.
  PowerSeries(std::vector<cplx> coeffs, double radius, double tail_tol, double work_radius)
      : PowerSeries(std::move(coeffs), radius, tail_tol, work_radius, Kind::taylor) {
    if (is_zero()) {
      *this = PowerSeries();
      return;
    }
    const double est = tail_estimate(work_radius_, 0);
    if (!(est <= tail_tol_))
      throw invalid_input("PowerSeries: declared tail tolerance " + std::to_string(tail_tol_) +
                          " below the geometric tail estimate " + std::to_string(est));
  }

  /// Exact polynomial; evaluation allowed anywhere.
  static PowerSeries polynomial(std::vector<cplx> coeffs) {
    return PowerSeries(std::move(coeffs), kInf, 0.0, kInf, Kind::exact);
  }

  /// Series whose error bound was propagated rather than estimated.
  static PowerSeries derived(std::vector<cplx> coeffs, double radius, double tail_tol, double work_radius) {
    if (tail_tol == 0.0 && radius == kInf) return polynomial(std::move(coeffs));
    return PowerSeries(std::move(coeffs), radius, tail_tol, work_radius, Kind::derived);
  }

  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx coeff(int m) const { return m >= 0 && m <= degree() ? coeffs_[m] : cplx{0.0}; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double radius() const { return radius_; }
  double tail_tol() const { return tail_tol_; }
  double work_radius() const { return work_radius_; }
  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::exact; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const cplx& c) { return c == cplx{0.0}; });
  }
  bool is_constant() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const cplx& c) { return c == cplx{0.0}; });
  }

  /// Majorant of sum_{m>M} m^k |a_m| r^m.
  ///
  /// Geometric model |a_m| r^m <= |a_M| r^M q^{m-M}, with q the per-step ratio of
  /// the last two nonzero coefficients times r, floored at r/R.
  double tail_estimate(double r, int k) const {
    if (kind_ == Kind::exact || is_zero()) return 0.0;
    int M = degree();
    while (M > 0 && coeffs_[M] == cplx{0.0}) --M;
    int prev = M - 1;
    while (prev >= 0 && coeffs_[prev] == cplx{0.0}) --prev;
    double q = radius_ == kInf ? 0.0 : r / radius_;
    if (prev >= 0) q = std::max(q, r * std::pow(std::abs(coeffs_[M]) / std::abs(coeffs_[prev]), 1.0 / (M - prev)));
    else q = std::max(q, r / std::max(1.0, static_cast<double>(M + 1)));
    return detail::geometric_tail(std::abs(coeffs_[M]) * std::pow(r, M), M, q, k);
  }

  /// sum_{m<=M} m^k |a_m| r^m.
  double abs_moment(double r, int k) const {
    double s = 0.0;
    for (int m = 0; m <= degree(); ++m) s += std::pow(static_cast<double>(m), k) * std::abs(coeffs_[m]) * std::pow(r, m);
    return s;
  }

  /// Upper bound of sup_{|z|<=r} |f(z)| including the declared error.
  double norm_bound(double r) const { return abs_moment(r, 0) + tail_tol_; }

 private:
  PowerSeries(std::vector<cplx> coeffs, double radius, double tail_tol, double work_radius, Kind kind)
      : coeffs_(std::move(coeffs)), radius_(radius), tail_tol_(tail_tol), work_radius_(work_radius), kind_(kind) {
    if (coeffs_.empty()) throw invalid_input("PowerSeries: empty coefficient list");
    for (const auto& c : coeffs_)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw invalid_input("PowerSeries: non-finite coefficient");
    if (kind_ == Kind::exact) return;
    if (!(radius_ > 1.0)) throw invalid_input("PowerSeries: radius must exceed 1");
    if (!(tail_tol_ >= 0.0)) throw invalid_input("PowerSeries: tail tolerance must be nonnegative");
    if (!(work_radius_ >= 0.0 && work_radius_ < radius_))
      throw invalid_input("PowerSeries: working radius must lie inside the disk of convergence");
  }

  std::vector<cplx> coeffs_;
  double radius_;
  double tail_tol_;
  double work_radius_;
  Kind kind_;
};

inline void check_disk(const PowerSeries& ps, cplx z) {
  const double az = std::abs(z);
  if (ps.is_exact()) return;
  if (!(az < ps.radius()) || az > ps.work_radius() * (1.0 + 1e-12))
    throw domain_violation("|z| = " + std::to_string(az) + " outside the working disk of radius " +
                           std::to_string(ps.work_radius()));
}

inline cplx ps_eval(const PowerSeries& ps, cplx z) {
  check_disk(ps, z);
  const auto& a = ps.coeffs();
  cplx s{0.0};
  for (std::size_t m = a.size(); m-- > 0;) s = s * z + a[m];
  return s;
}

inline PowerSeries ps_cauchy_product(const PowerSeries& a, const PowerSeries& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<cplx> c(ca.size() + cb.size() - 1, cplx{0.0});
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j) c[i + j] += ca[i] * cb[j];
  if (a.is_exact() && b.is_exact()) return PowerSeries::polynomial(std::move(c));
  const double r = std::min(a.work_radius(), b.work_radius());
  const double ta = a.tail_tol();
  const double tb = b.tail_tol();
  const double tol = ta * b.norm_bound(r) + tb * a.norm_bound(r) + ta * tb;
  return PowerSeries::derived(std::move(c), std::min(a.radius(), b.radius()), tol, r);
}

/// A_m = sum_j |a_j| |b_{m-j}|, returned as a real-coefficient series.
inline PowerSeries ps_abs_convolution(const PowerSeries& a, const PowerSeries& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<cplx> c(ca.size() + cb.size() - 1, cplx{0.0});
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j) c[i + j] += std::abs(ca[i]) * std::abs(cb[j]);
  if (a.is_exact() && b.is_exact()) return PowerSeries::polynomial(std::move(c));
  const double r = std::min(a.work_radius(), b.work_radius());
  const double ta = a.tail_tol();
  const double tb = b.tail_tol();
  const double tol = ta * b.norm_bound(r) + tb * a.norm_bound(r) + ta * tb;
  return PowerSeries::derived(std::move(c), std::min(a.radius(), b.radius()), tol, r);
}

inline PowerSeries ps_derivative(const PowerSeries& ps) {
  if (ps.degree() == 0) return ps.is_exact() ? PowerSeries::polynomial({cplx{0.0}}) : PowerSeries();
  std::vector<cplx> d(ps.degree());
  for (int m = 0; m < ps.degree(); ++m) d[m] = static_cast<double>(m + 1) * ps.coeffs()[m + 1];
  if (ps.is_exact()) return PowerSeries::polynomial(std::move(d));
  const double r = ps.work_radius();
  // sum_{m>M} m |a_m| r^{m-1}. A propagated bound carries no derivative information.
  double tol = r > 0.0 ? ps.tail_estimate(r, 1) / r : 0.0;
  if (ps.kind() == PowerSeries::Kind::derived) tol = kInf;
  if (ps.kind() == PowerSeries::Kind::taylor) {
    const double own = PowerSeries::derived(d, ps.radius(), kInf, r).tail_estimate(r, 0);
    return PowerSeries(std::move(d), ps.radius(), std::max(tol, own), r);
  }
  return PowerSeries::derived(std::move(d), ps.radius(), tol, r);
}

// ---------------------------------------------------------------------------
// Real C^k functions on [0,1]

/// Real function on [0,1] with closed-form derivatives up to order 4.
class SmoothFunction {
 public:
  using Fn = std::function<double(double)>;

  SmoothFunction() = default;

  SmoothFunction(std::string name, int smoothness, Fn eval, std::array<Fn, 4> derivs)
      : name_(std::move(name)), smoothness_(smoothness), eval_(std::move(eval)), derivs_(std::move(derivs)) {
    if (!eval_) throw invalid_input("SmoothFunction: missing evaluator");
    for (int j = 1; j <= std::min(smoothness_, 4); ++j)
      if (!derivs_[j - 1]) throw invalid_input("SmoothFunction " + name_ + ": derivative " + std::to_string(j) + " missing");
    check_first_derivative();
  }

  const std::string& name() const { return name_; }
  int smoothness() const { return smoothness_; }
  bool has_derivative(int j) const { return j == 0 || (j >= 1 && j <= 4 && static_cast<bool>(derivs_[j - 1])); }

  double operator()(double x) const { return eval_(x); }

  double derivative(int j, double x) const {
    if (j == 0) return eval_(x);
    if (!has_derivative(j)) throw invalid_input("SmoothFunction " + name_ + ": derivative " + std::to_string(j) + " unavailable");
    return derivs_[j - 1](x);
  }

  /// The j-th derivative as a standalone evaluator.
  Fn derivative_fn(int j) const {
    if (j == 0) return eval_;
    if (!has_derivative(j)) throw invalid_input("SmoothFunction " + name_ + ": derivative " + std::to_string(j) + " unavailable");
    return derivs_[j - 1];
  }

 private:
  void check_first_derivative() const {
    if (!has_derivative(1)) return;
    constexpr double h = 1e-6;
    for (int i = 0; i <= 16; ++i) {
      const double x = std::min(i / 16.0, 1.0 - h);
      const double fd = (eval_(x + h) - eval_(x)) / h;
      const double d = derivs_[0](x);
      const double scale = 1.0 + std::abs(d) + std::abs(eval_(x));
      if (std::abs(fd - d) > 1e-3 * scale)
        throw invalid_input("SmoothFunction " + name_ + ": derivative disagrees with finite difference at x=" +
                            std::to_string(x));
    }
  }

  std::string name_;
  int smoothness_ = 0;
  Fn eval_;
  std::array<Fn, 4> derivs_{};
};

/// Pointwise product with Leibniz-rule derivatives.
inline SmoothFunction smooth_product(const SmoothFunction& f, const SmoothFunction& g) {
  const int k = std::min({f.smoothness(), g.smoothness(), 4});
  std::array<SmoothFunction::Fn, 4> d{};
  static constexpr int binom[5][5] = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}};
  for (int j = 1; j <= k; ++j) {
    d[j - 1] = [f, g, j](double x) {
      double s = 0.0;
      for (int i = 0; i <= j; ++i) s += binom[j][i] * f.derivative(i, x) * g.derivative(j - i, x);
      return s;
    };
  }
  return SmoothFunction("(" + f.name() + ")*(" + g.name() + ")", k,
                        [f, g](double x) { return f(x) * g(x); }, std::move(d));
}

struct SupNorm {
  double value = 0.0;   // refined-grid maximum
  double coarse = 0.0;  // base-grid maximum
  bool converged = true;
};

/// sup_{[0,1]} |fn| on a uniform grid with one refinement (grid doubled).
inline SupNorm sup_norm_01(const std::function<double(double)>& fn, int grid = 4097) {
  if (grid < 2) throw invalid_input("sup_norm_01: grid must have at least two points");
  SupNorm out;
  const int fine = 2 * (grid - 1) + 1;
  for (int i = 0; i < fine; ++i) {
    const double v = std::abs(fn(static_cast<double>(i) / (fine - 1)));
    out.value = std::max(out.value, v);
    if (i % 2 == 0) out.coarse = std::max(out.coarse, v);
  }
  out.converged = out.value - out.coarse <= 1e-6 * (1.0 + out.value);
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

struct FunctionCatalogEntry {
  std::string name;
  std::optional<PowerSeries> as_series;
  SmoothFunction as_smooth;
  std::string provenance;
};

namespace detail {

// Smallest M with geometric tail below the target at radius r.
inline PowerSeries truncate_taylor(const std::function<cplx(int)>& coeff, double radius, double r, int max_terms = 600) {
  std::vector<cplx> c;
  for (int M = 0; M < max_terms; ++M) {
    c.push_back(coeff(M));
    if (M < 4) continue;
    // Require two consecutive nonzero trailing coefficients for a meaningful ratio;
    // otherwise keep extending (sin/cos alternate zeros).
    if (c.back() == cplx{0.0}) continue;
    const double est = PowerSeries::derived(c, radius, kInf, r).tail_estimate(r, 0);
    if (est < kSeriesTailTarget) return PowerSeries(std::move(c), radius, kSeriesTailTarget, r);
  }
  throw invalid_input("catalog: series did not reach the tail target within " + std::to_string(max_terms) + " terms");
}

inline double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

inline std::vector<double> parse_number_list(const std::string& body) {
  std::vector<double> out;
  std::string s = body;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw invalid_input("catalog: expected [c0,c1,...] in '" + body + "'");
  s = s.substr(1, s.size() - 2);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw invalid_input("catalog: bad number '" + tok + "'");
    }
    if (tok.find_first_not_of(" \t", used) != std::string::npos) throw invalid_input("catalog: bad number '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw invalid_input("catalog: empty coefficient list");
  return out;
}

inline FunctionCatalogEntry polynomial_entry(const std::string& name, std::vector<double> c) {
  std::vector<cplx> cc(c.begin(), c.end());
  auto eval_poly = [](const std::vector<double>& p, double x) {
    double s = 0.0;
    for (std::size_t m = p.size(); m-- > 0;) s = s * x + p[m];
    return s;
  };
  std::array<std::vector<double>, 5> ders;
  ders[0] = c;
  for (int j = 1; j <= 4; ++j) {
    const auto& prev = ders[j - 1];
    std::vector<double> d(prev.size() > 1 ? prev.size() - 1 : 1, 0.0);
    for (std::size_t m = 1; m < prev.size(); ++m) d[m - 1] = static_cast<double>(m) * prev[m];
    ders[j] = std::move(d);
  }
  std::array<SmoothFunction::Fn, 4> fns;
  for (int j = 1; j <= 4; ++j) fns[j - 1] = [p = ders[j], eval_poly](double x) { return eval_poly(p, x); };
  return {name, PowerSeries::polynomial(std::move(cc)),
          SmoothFunction(name, 4, [p = c, eval_poly](double x) { return eval_poly(p, x); }, std::move(fns)),
          "polynomial with coefficients " + name};
}

}  // namespace detail

/// Default working radius for catalog series: covers the disks and level curves
/// used by the complex and Faber checks.
inline constexpr double kCatalogWorkRadius = 3.0;

/// Look up "exp", "sin", "cos", "poly:[c0,c1,...]", "geom:a" (1/(a-z), a>1) or
/// the monomial shorthand "e<k>".
inline FunctionCatalogEntry catalog_lookup(const std::string& name, double work_radius = kCatalogWorkRadius) {
  using detail::factorial;
  if (name == "exp") {
    auto ps = detail::truncate_taylor([](int k) { return cplx{1.0 / factorial(k)}; }, kInf, work_radius);
    auto e = [](double x) { return std::exp(x); };
    return {name, ps, SmoothFunction(name, 4, e, {e, e, e, e}), "exp(z), a_k = 1/k!"};
  }
  if (name == "sin" || name == "cos") {
    const bool is_sin = name == "sin";
    auto coeff = [is_sin](int k) {
      if (is_sin ? k % 2 == 0 : k % 2 == 1) return cplx{0.0};
      const int sign = ((is_sin ? (k - 1) / 2 : k / 2) % 2 == 0) ? 1 : -1;
      return cplx{sign / factorial(k)};
    };
    auto ps = detail::truncate_taylor(coeff, kInf, work_radius);
    auto s = [](double x) { return std::sin(x); };
    auto c = [](double x) { return std::cos(x); };
    auto ms = [](double x) { return -std::sin(x); };
    auto mc = [](double x) { return -std::cos(x); };
    if (is_sin) return {name, ps, SmoothFunction(name, 4, s, {c, ms, mc, s}), "sin(z)"};
    return {name, ps, SmoothFunction(name, 4, c, {ms, mc, s, c}), "cos(z)"};
  }
  if (name.rfind("poly:", 0) == 0) return detail::polynomial_entry(name, detail::parse_number_list(name.substr(5)));
  if (name.size() >= 2 && name[0] == 'e' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int k = std::stoi(name.substr(1));
    if (k > 64) throw invalid_input("catalog: monomial degree too large in '" + name + "'");
    std::vector<double> c(k + 1, 0.0);
    c[k] = 1.0;
    auto entry = detail::polynomial_entry(name, std::move(c));
    entry.provenance = "monomial x^" + std::to_string(k);
    return entry;
  }
  if (name.rfind("geom:", 0) == 0) {
    double a = 0.0;
    std::size_t used = 0;
    try {
      a = std::stod(name.substr(5), &used);
    } catch (const std::exception&) {
      throw invalid_input("catalog: bad parameter in '" + name + "'");
    }
    if (used != name.size() - 5 || !(a > 1.0)) throw invalid_input("catalog: geom:a requires a > 1 in '" + name + "'");
    const double r = std::min(work_radius, 0.5 * (1.0 + a));
    auto ps = detail::truncate_taylor([a](int k) { return cplx{std::pow(a, -k - 1)}; }, a, r, 5000);
    std::array<SmoothFunction::Fn, 4> d;
    for (int j = 1; j <= 4; ++j)
      d[j - 1] = [a, j](double x) { return factorial(j) / std::pow(a - x, j + 1); };
    return {name, ps, SmoothFunction(name, 4, [a](double x) { return 1.0 / (a - x); }, std::move(d)),
            "1/(a-z) with a = " + name.substr(5)};
  }
  throw invalid_input("catalog: unknown function '" + name + "'");
}

}  // namespace gvlab
