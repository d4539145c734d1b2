#pragma once

// Real operators on [0,1]: Bernstein B_n, Paltanea U_n^rho and the genuine
// Bernstein-Durrmeyer U_n = U_n^1, their Gruss functionals, Voronovskaya and
// Gruss-Voronovskaya residuals, and the right-hand sides of the real-variable
// bounds.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gvlab/exact.hpp"
#include "gvlab/funcs.hpp"
#include "gvlab/moduli.hpp"
#include "gvlab/quadrature.hpp"

namespace gvlab {

using RealFn = std::function<double(double)>;

enum class Family { bernstein, paltanea, genuine_durrmeyer };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::bernstein: return "bernstein";
    case Family::paltanea: return "paltanea";
    case Family::genuine_durrmeyer: return "genuine_durrmeyer";
  }
  return "?";
}

struct OperatorSpec {
  Family family = Family::bernstein;
  int n = 1;
  double rho = 1.0;  // Paltanea only; genuine Durrmeyer is rho = 1

  static OperatorSpec bernstein(int n) { return {Family::bernstein, n, 1.0}; }
  static OperatorSpec paltanea(int n, double rho) { return {Family::paltanea, n, rho}; }
  static OperatorSpec genuine_durrmeyer(int n) { return {Family::genuine_durrmeyer, n, 1.0}; }

  void validate() const {
    if (n < 1) throw invalid_input("OperatorSpec: n must be >= 1");
    if (!(rho > 0.0)) throw invalid_input("OperatorSpec: rho must be positive");
    if (family == Family::genuine_durrmeyer && rho != 1.0) throw invalid_input("OperatorSpec: genuine Durrmeyer has rho = 1");
  }

  double effective_rho() const { return family == Family::genuine_durrmeyer ? 1.0 : rho; }

  /// c_op in n T(f,g) -> c_op x(1-x) f'g'.
  double voronovskaya_constant() const {
    switch (family) {
      case Family::bernstein: return 1.0;
      case Family::paltanea: return (rho + 1.0) / rho;
      case Family::genuine_durrmeyer: return 2.0;
    }
    return 1.0;
  }
};

inline void check_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw domain_violation("point " + std::to_string(x) + " outside [0,1]");
}

/// p_{n,k}(x), k = 0..n, by the multiplicative recurrence started from the
/// mode, mirrored for x > 1/2 so the ratio x/(1-x) never exceeds 1.
inline std::vector<double> bernstein_weights(int n, double x) {
  if (n < 0) throw invalid_input("bernstein_weights: n must be >= 0");
  check_unit_interval(x);
  std::vector<double> w(n + 1, 0.0);
  const bool mirror = x > 0.5;
  const double y = mirror ? 1.0 - x : x;
  if (y == 0.0) {
    w[mirror ? n : 0] = 1.0;
    return w;
  }
  const double ratio = y / (1.0 - y);
  const int mode = std::clamp(static_cast<int>(std::floor((n + 1) * y)), 0, n);
  const double log_mode = std::lgamma(n + 1.0) - std::lgamma(mode + 1.0) - std::lgamma(n - mode + 1.0) +
                          mode * std::log(y) + (n - mode) * std::log1p(-y);
  std::vector<double> q(n + 1, 0.0);
  q[mode] = std::exp(log_mode);
  for (int k = mode; k < n; ++k) q[k + 1] = q[k] * (static_cast<double>(n - k) / (k + 1)) * ratio;
  for (int k = mode; k > 0; --k) q[k - 1] = q[k] * (static_cast<double>(k) / (n - k + 1)) / ratio;
  double total = 0.0;
  for (double v : q) total += v;
  for (int k = 0; k <= n; ++k) w[mirror ? n - k : k] = q[k] / total;
  return w;
}

template <class F>
double bernstein_eval(F&& f, int n, double x) {
  if (n < 1) throw invalid_input("bernstein_eval: n must be >= 1");
  const auto w = bernstein_weights(n, x);
  double s = 0.0;
  for (int k = 0; k <= n; ++k)
    if (w[k] != 0.0) s += w[k] * f(static_cast<double>(k) / n);
  return s;
}

/// Node functionals lambda_k(f), k = 0..n, of an operator sum_k lambda_k(f) p_{n,k}(x).
struct NodeValues {
  std::vector<double> lambda;
  bool converged = true;
};

struct OpValue {
  double value = 0.0;
  bool converged = true;
};

inline double apply_nodes(const NodeValues& nv, double x) {
  const int n = static_cast<int>(nv.lambda.size()) - 1;
  const auto w = bernstein_weights(n, x);
  double s = 0.0;
  for (int k = 0; k <= n; ++k) s += w[k] * nv.lambda[k];
  return s;
}

/// Paltanea functionals via Gauss-Jacobi with exponents ((n-k)rho - 1, k rho - 1).
inline NodeValues paltanea_nodes(const RealFn& f, int n, double rho) {
  if (n < 1 || !(rho > 0.0)) throw invalid_input("paltanea_nodes: need n >= 1, rho > 0");
  NodeValues nv;
  nv.lambda.resize(n + 1);
  nv.lambda[0] = f(0.0);
  nv.lambda[n] = f(1.0);
  for (int k = 1; k < n; ++k) {
    const auto q = beta_expectation(f, (n - k) * rho - 1.0, k * rho - 1.0);
    nv.lambda[k] = q.value;
    nv.converged = nv.converged && q.converged;
  }
  return nv;
}

/// Genuine Durrmeyer functionals (n-1) int f p_{n-2,k-1}, integrated with a
/// Gauss-Legendre rule against the explicit Bernstein basis polynomial.
inline NodeValues genuine_durrmeyer_nodes(const RealFn& f, int n) {
  if (n < 1) throw invalid_input("genuine_durrmeyer_nodes: n must be >= 1");
  NodeValues nv;
  nv.lambda.resize(n + 1);
  nv.lambda[0] = f(0.0);
  nv.lambda[n] = f(1.0);
  for (int k = 1; k < n; ++k) {
    const double logc = std::lgamma(n - 1.0) - std::lgamma(static_cast<double>(k)) - std::lgamma(static_cast<double>(n - k));
    auto integrand = [&](double t) {
      if (t <= 0.0 || t >= 1.0) {
        const bool at0 = t <= 0.0;
        const int e = at0 ? k - 1 : n - k - 1;
        return e == 0 ? (n - 1.0) * f(t) : 0.0;
      }
      const double lp = logc + (k - 1) * std::log(t) + (n - k - 1) * std::log1p(-t);
      return (n - 1.0) * std::exp(lp) * f(t);
    };
    const auto q = beta_expectation(integrand, 0.0, 0.0);
    nv.lambda[k] = q.value;
    nv.converged = nv.converged && q.converged;
  }
  return nv;
}

inline NodeValues operator_nodes(const OperatorSpec& spec, const RealFn& f) {
  spec.validate();
  switch (spec.family) {
    case Family::bernstein: {
      NodeValues nv;
      nv.lambda.resize(spec.n + 1);
      for (int k = 0; k <= spec.n; ++k) nv.lambda[k] = f(static_cast<double>(k) / spec.n);
      return nv;
    }
    case Family::paltanea: return paltanea_nodes(f, spec.n, spec.rho);
    case Family::genuine_durrmeyer: return paltanea_nodes(f, spec.n, 1.0);
  }
  return {};
}

inline OpValue operator_eval(const OperatorSpec& spec, const RealFn& f, double x) {
  check_unit_interval(x);
  const NodeValues nv = operator_nodes(spec, f);
  return {apply_nodes(nv, x), nv.converged};
}

inline OpValue paltanea_eval(const RealFn& f, int n, double rho, double x) {
  return operator_eval(OperatorSpec::paltanea(n, rho), f, x);
}

/// Polynomial path: exact moments, summed in floating point.
inline double paltanea_eval_poly(const std::vector<double>& coeffs, int n, double rho, double x) {
  if (n < 1 || !(rho > 0.0)) throw invalid_input("paltanea_eval_poly: need n >= 1, rho > 0");
  check_unit_interval(x);
  const auto w = bernstein_weights(n, x);
  double s = 0.0;
  for (int k = 0; k <= n; ++k) {
    double node = 0.0;
    for (std::size_t m = 0; m < coeffs.size(); ++m)
      if (coeffs[m] != 0.0) node += coeffs[m] * paltanea_monomial_moment(n, rho, k, static_cast<int>(m));
    s += w[k] * node;
  }
  return s;
}

/// Specialized (n-1) int f p_{n-2,k-1} form.
inline OpValue genuine_durrmeyer_eval(const RealFn& f, int n, double x) {
  check_unit_interval(x);
  const NodeValues nv = genuine_durrmeyer_nodes(f, n);
  return {apply_nodes(nv, x), nv.converged};
}

/// T(f,g;x) = L(fg;x) - L(f;x) L(g;x), with fg formed pointwise.
inline OpValue gruss_functional(const OperatorSpec& spec, const RealFn& f, const RealFn& g, double x) {
  const auto fg = [&](double t) { return f(t) * g(t); };
  const OpValue a = operator_eval(spec, fg, x);
  const OpValue b = operator_eval(spec, f, x);
  const OpValue c = operator_eval(spec, g, x);
  return {a.value - b.value * c.value, a.converged && b.converged && c.converged};
}

/// Operator bound to a function pair, with node functionals computed once per degree.
class GrussEvaluator {
 public:
  GrussEvaluator(const OperatorSpec& spec, const RealFn& f, const RealFn& g)
      : fg_(operator_nodes(spec, [&](double t) { return f(t) * g(t); })),
        f_(operator_nodes(spec, f)),
        g_(operator_nodes(spec, g)) {}

  /// Signed T(f,g;x).
  double gruss(double x) const { return apply_nodes(fg_, x) - apply_nodes(f_, x) * apply_nodes(g_, x); }
  double apply_f(double x) const { return apply_nodes(f_, x); }
  double apply_g(double x) const { return apply_nodes(g_, x); }
  bool converged() const { return fg_.converged && f_.converged && g_.converged; }

 private:
  NodeValues fg_, f_, g_;
};

// ---------------------------------------------------------------------------
// Voronovskaya and Gruss-Voronovskaya residuals

struct VoronovskayaResult {
  double residual = 0.0;
  double bound = 0.0;
};

/// |n(B_n f - f)(x) - x(1-x) f''(x)/2| and x(1-x) omega_1(f''; sqrt(2/n)).
inline VoronovskayaResult voronovskaya_residual_bernstein(const SmoothFunction& f, int n, double x, ModulusGrid grid = {}) {
  if (!f.has_derivative(2)) throw invalid_input("voronovskaya_residual_bernstein: f needs a second derivative");
  check_unit_interval(x);
  const double X = x * (1.0 - x);
  const double bn = bernstein_eval(f, n, x);
  VoronovskayaResult out;
  out.residual = std::abs(n * (bn - f(x)) - 0.5 * X * f.derivative(2, x));
  out.bound = X * modulus(f.derivative_fn(2), 1, std::min(1.0, std::sqrt(2.0 / n)), grid);
  return out;
}

/// Signed Gruss-Voronovskaya functional T(f,g;x) - c_op x(1-x) f'(x) g'(x) / n.
inline double gv_functional(const OperatorSpec& spec, const GrussEvaluator& ev, const SmoothFunction& f,
                            const SmoothFunction& g, double x) {
  if (!f.has_derivative(1) || !g.has_derivative(1)) throw invalid_input("gv_functional: f and g need first derivatives");
  const double X = x * (1.0 - x);
  return ev.gruss(x) - spec.voronovskaya_constant() * X * f.derivative(1, x) * g.derivative(1, x) / spec.n;
}

inline double gv_residual(const OperatorSpec& spec, const SmoothFunction& f, const SmoothFunction& g, double x) {
  if (!f.has_derivative(1) || !g.has_derivative(1)) throw invalid_input("gv_residual: f and g need first derivatives");
  check_unit_interval(x);
  const GrussEvaluator ev(spec, [&](double t) { return f(t); }, [&](double t) { return g(t); });
  return std::abs(gv_functional(spec, ev, f, g, x));
}

struct BoundValue {
  double value = 0.0;
  double slack = 0.0;  // grid-resolution uncertainty of `value`
};

/// Right-hand side of the C^2 Gruss-Voronovskaya bound for B_n:
/// (x(1-x)/2) [w~((fg)''; d) + |g| w~(f''; d) + |f| w~(g''; d) + |f''| |g''| / (2n)],
/// d = 1/(3 sqrt n). Moduli and norms are precomputed per pair.
class C2GvBound {
 public:
  C2GvBound(const SmoothFunction& f, const SmoothFunction& g, int grid_points = 2049) {
    if (!f.has_derivative(2) || !g.has_derivative(2)) throw invalid_input("gv_bound_c2: f and g need second derivatives");
    const SmoothFunction fg = smooth_product(f, g);
    fg2_ = omega1_majorant(fg.derivative_fn(2), grid_points);
    f2_ = omega1_majorant(f.derivative_fn(2), grid_points);
    g2_ = omega1_majorant(g.derivative_fn(2), grid_points);
    nf_ = sup_norm_01(f.derivative_fn(0));
    ng_ = sup_norm_01(g.derivative_fn(0));
    nf2_ = sup_norm_01(f.derivative_fn(2));
    ng2_ = sup_norm_01(g.derivative_fn(2));
  }

  BoundValue operator()(int n, double x) const {
    if (n < 1) throw invalid_input("gv_bound_c2: n must be >= 1");
    check_unit_interval(x);
    const double d = 1.0 / (3.0 * std::sqrt(static_cast<double>(n)));
    const double half_X = 0.5 * x * (1.0 - x);
    BoundValue b;
    b.value = half_X * (fg2_.value(d) + ng_.value * f2_.value(d) + nf_.value * g2_.value(d) +
                        nf2_.value * ng2_.value / (2.0 * n));
    const double norm_slack = (ng_.value - ng_.coarse) * f2_.value(d) + (nf_.value - nf_.coarse) * g2_.value(d) +
                              ((nf2_.value * ng2_.value) - (nf2_.coarse * ng2_.coarse)) / (2.0 * n);
    b.slack = half_X * (fg2_.slack(d) + ng_.value * f2_.slack(d) + nf_.value * g2_.slack(d) + norm_slack);
    return b;
  }

 private:
  MajorantPair fg2_, f2_, g2_;
  SupNorm nf_, ng_, nf2_, ng2_;
};

inline BoundValue gv_bound_c2(const SmoothFunction& f, const SmoothFunction& g, int n, double x) {
  return C2GvBound(f, g)(n, x);
}

/// Bracketed factor of the C^1 bounds:
/// w3(f';h) w3(g';h) + |f'| w3(g';h) + |g'| w3(f';h) + max{s|f|, w3(f';h)} max{s|g|, w3(g';h)}.
inline double omega3_bracket(const SmoothFunction& f, const SmoothFunction& g, double h, double s, ModulusGrid grid = {}) {
  if (!f.has_derivative(1) || !g.has_derivative(1)) throw invalid_input("bracket: f and g need first derivatives");
  const double wf = modulus(f.derivative_fn(1), 3, h, grid);
  const double wg = modulus(g.derivative_fn(1), 3, h, grid);
  const double nf = sup_norm_01(f.derivative_fn(0)).value;
  const double ng = sup_norm_01(g.derivative_fn(0)).value;
  const double nf1 = sup_norm_01(f.derivative_fn(1)).value;
  const double ng1 = sup_norm_01(g.derivative_fn(1)).value;
  return wf * wg + nf1 * wg + ng1 * wf + std::max(s * nf, wf) * std::max(s * ng, wg);
}

/// Bracket of the Bernstein C^1 bound: h = n^{-1/6}, s = n^{-1/2}.
inline double gv_bracket_bernstein(const SmoothFunction& f, const SmoothFunction& g, int n, ModulusGrid grid = {}) {
  if (n < 1) throw invalid_input("gv_bracket_bernstein: n must be >= 1");
  return omega3_bracket(f, g, std::pow(n, -1.0 / 6.0), std::pow(n, -0.5), grid);
}

/// delta_{n,rho} = (rho+1)/(n rho + 1).
inline double paltanea_delta(int n, double rho) { return (rho + 1.0) / (n * rho + 1.0); }

/// Bracket of the Paltanea C^1 bound: h = delta^{1/6}, s = delta^{1/2}.
inline double gv_bracket_paltanea(const SmoothFunction& f, const SmoothFunction& g, int n, double rho, ModulusGrid grid = {}) {
  if (n < 1 || !(rho > 0.0)) throw invalid_input("gv_bracket_paltanea: need n >= 1, rho > 0");
  const double d = paltanea_delta(n, rho);
  return omega3_bracket(f, g, std::pow(d, 1.0 / 6.0), std::sqrt(d), grid);
}

/// Closed forms A = M3^2/(M2 M4), B = M4/M2 for U_n^rho, M_r(x) = U_n^rho((e_1 - x)^r; x).
inline std::pair<double, double> paltanea_AB(int n, double rho, double x) {
  if (n < 1 || !(rho > 0.0)) throw invalid_input("paltanea_AB: need n >= 1, rho > 0");
  check_unit_interval(x);
  const double X = x * (1.0 - x);
  const double Xp = 1.0 - 2.0 * x;
  const double q = rho * rho + 3.0 * rho + 3.0;
  const double tail = (rho + 2.0) * (rho + 3.0);
  const double a_den = (n * rho + 2.0) * ((3.0 * rho * (rho + 1.0) * n - 6.0 * q) * X + tail);
  const double b_den = (n * rho + 2.0) * (n * rho + 3.0);
  if (a_den == 0.0 || b_den == 0.0) throw std::logic_error("paltanea_AB: vanishing denominator");
  const double A = (rho + 2.0) * (rho + 2.0) * Xp * Xp * (n * rho + 3.0) / a_den;
  const double B = (3.0 * (rho * (rho + 1.0) * n - 2.0 * q) * X + tail) / b_den;
  return {A, B};
}

/// Central moment M_r(x) = U_n^rho((e_1 - x)^r; x) from the monomial moments.
inline double paltanea_central_moment(int n, double rho, int r, double x) {
  std::vector<double> c(r + 1);
  double binom = 1.0;
  for (int j = 0; j <= r; ++j) {
    c[j] = binom * std::pow(-x, r - j);
    binom = binom * (r - j) / (j + 1);
  }
  return paltanea_eval_poly(c, n, rho, x);
}

inline double paltanea_to_bernstein_gap(const RealFn& f, int n, double rho, double x) {
  const OpValue u = paltanea_eval(f, n, rho, x);
  return std::abs(u.value - bernstein_eval(f, n, x));
}

}  // namespace gvlab
