#pragma once

// Complex Bernstein and genuine Bernstein-Durrmeyer operators on disks, disk
// sup-norms by boundary sampling, the Gruss upper bounds and the
// Gruss-Voronovskaya residuals, and the 1/n equivalence sweep.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "gvlab/funcs.hpp"
#include "gvlab/rates.hpp"

namespace gvlab {

enum class ComplexFamily { bernstein, durrmeyer };

inline std::string to_string(ComplexFamily f) { return f == ComplexFamily::bernstein ? "bernstein" : "durrmeyer"; }

/// Floating-point monomial-basis coefficients of L_n(e_m), m = 0..max_degree.
///
/// Every coefficient is nonnegative, so evaluating L_n(f) = sum_m a_m L_n(e_m)
/// never cancels inside an image. Durrmeyer images use U_n(e_m) = B_n(phi_m)
/// with phi_m(t) = prod_{i<m} (n t + i)/(n + i).
class MonomialImages {
 public:
  MonomialImages(ComplexFamily family, int n, int max_degree) : family_(family), n_(n) {
    if (n < 1) throw invalid_input("MonomialImages: n must be >= 1");
    if (max_degree < 0) throw invalid_input("MonomialImages: negative degree");
    // Bernstein: c_{m+1,i} = (i/n) c_{m,i} + (1 - (i-1)/n) c_{m,i-1}.
    std::vector<std::vector<double>> b{{1.0}};
    for (int m = 0; m < max_degree; ++m) {
      const auto& prev = b.back();
      const int deg = std::min(m + 1, n);
      std::vector<double> next(deg + 1, 0.0);
      for (int i = 0; i <= deg; ++i) {
        double v = 0.0;
        if (i < static_cast<int>(prev.size())) v += static_cast<double>(i) / n * prev[i];
        if (i >= 1 && i - 1 < static_cast<int>(prev.size())) v += (1.0 - static_cast<double>(i - 1) / n) * prev[i - 1];
        next[i] = v;
      }
      b.push_back(std::move(next));
    }
    if (family == ComplexFamily::bernstein) {
      rows_ = std::move(b);
      return;
    }
    rows_.reserve(max_degree + 1);
    std::vector<double> phi{1.0};
    for (int m = 0; m <= max_degree; ++m) {
      if (m > 0) {
        const double den = n + (m - 1.0);
        std::vector<double> next(phi.size() + 1, 0.0);
        for (std::size_t j = 0; j < phi.size(); ++j) {
          next[j] += phi[j] * (m - 1.0) / den;
          next[j + 1] += phi[j] * n / den;
        }
        phi = std::move(next);
      }
      std::vector<double> row(std::min(m, n) + 1, 0.0);
      for (std::size_t j = 0; j < phi.size(); ++j)
        for (std::size_t i = 0; i < b[j].size(); ++i) row[i] += phi[j] * b[j][i];
      rows_.push_back(std::move(row));
    }
  }

  ComplexFamily family() const { return family_; }
  int n() const { return n_; }
  int max_degree() const { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<double>& row(int m) const { return rows_.at(m); }

  /// Monomial coefficients of L_n(f) for a series of degree <= max_degree.
  std::vector<cplx> image(const PowerSeries& f) const {
    if (f.degree() > max_degree()) throw invalid_input("MonomialImages: series degree exceeds table");
    std::vector<cplx> out(std::min(f.degree(), n_) + 1, cplx{0.0});
    for (int m = 0; m <= f.degree(); ++m) {
      const cplx a = f.coeffs()[m];
      if (a == cplx{0.0}) continue;
      const auto& r = rows_[m];
      for (std::size_t i = 0; i < r.size(); ++i) out[i] += a * r[i];
    }
    return out;
  }

 private:
  ComplexFamily family_;
  int n_;
  std::vector<std::vector<double>> rows_;
};

inline cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx s{0.0};
  for (std::size_t i = c.size(); i-- > 0;) s = s * z + c[i];
  return s;
}

inline cplx complex_operator_eval(ComplexFamily family, const PowerSeries& f, int n, cplx z) {
  check_disk(f, z);
  const MonomialImages imgs(family, n, f.degree());
  return horner(imgs.image(f), z);
}

/// B_n(f)(z) through the monomial images of the series coefficients.
inline cplx cbernstein_eval(const PowerSeries& f, int n, cplx z) {
  return complex_operator_eval(ComplexFamily::bernstein, f, n, z);
}

/// U_n(f)(z) through exact-moment monomial images.
inline cplx cdurrmeyer_eval(const PowerSeries& f, int n, cplx z) {
  return complex_operator_eval(ComplexFamily::durrmeyer, f, n, z);
}

/// Direct node sum sum_k C(n,k) z^k (1-z)^{n-k} f(k/n), with the binomial
/// weights advanced by the complex factor (n-k)/(k+1) * z/(1-z). Cancels
/// badly for |z| > 1 and large n; kept as an independent small-n route.
inline cplx cbernstein_eval_direct(const PowerSeries& f, int n, cplx z) {
  if (n < 1) throw invalid_input("cbernstein_eval_direct: n must be >= 1");
  check_disk(f, z);
  if (z == cplx{1.0}) return ps_eval(f, 1.0);
  const cplx ratio = z / (1.0 - z);
  cplx w = std::pow(1.0 - z, n);
  cplx s{0.0};
  for (int k = 0; k <= n; ++k) {
    s += w * ps_eval(f, static_cast<double>(k) / n);
    w *= ratio * (static_cast<double>(n - k) / (k + 1));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Disk norms

struct DiskNormEstimate {
  double r = 0.0;
  int samples = 0;
  double value = 0.0;
  bool refined = false;
};

namespace detail {

// Golden-section polish of |F(r e^{it})| on [t0 - h, t0 + h].
inline double polish_max(const std::function<cplx(cplx)>& F, double r, double t0, double h) {
  auto val = [&](double t) { return std::abs(F(std::polar(r, t))); };
  constexpr double g = 0.6180339887498949;
  double a = t0 - h, b = t0 + h;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = val(c), fd = val(d);
  for (int it = 0; it < 60 && b - a > 1e-13; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = val(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = val(d);
    }
  }
  return std::max({fc, fd, val(t0)});
}

inline double sampled_max(const std::function<cplx(cplx)>& F, double r, int samples) {
  std::vector<double> vals(samples);
  for (int j = 0; j < samples; ++j) vals[j] = std::abs(F(std::polar(r, 2.0 * std::numbers::pi * j / samples)));
  // Polish the strongest local maxima.
  std::vector<int> peaks;
  for (int j = 0; j < samples; ++j) {
    const double prev = vals[(j + samples - 1) % samples];
    const double next = vals[(j + 1) % samples];
    if (vals[j] >= prev && vals[j] >= next) peaks.push_back(j);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int a, int b) { return vals[a] > vals[b]; });
  if (peaks.size() > 4) peaks.resize(4);
  double best = *std::max_element(vals.begin(), vals.end());
  const double h = 2.0 * std::numbers::pi / samples;
  for (int j : peaks) best = std::max(best, polish_max(F, r, 2.0 * std::numbers::pi * j / samples, h));
  return best;
}

}  // namespace detail

/// max |F| over |z| = r: equispaced samples (local maxima polished), doubled
/// from `base_samples` until the relative change drops below 1e-9 or `cap`.
inline DiskNormEstimate sup_norm_disk(const std::function<cplx(cplx)>& F, double r, int base_samples = 1024,
                                      int cap = 1 << 16) {
  if (!(r >= 0.0)) throw invalid_input("sup_norm_disk: negative radius");
  if (base_samples < 4) throw invalid_input("sup_norm_disk: need at least 4 samples");
  DiskNormEstimate est;
  est.r = r;
  int samples = base_samples;
  double prev = detail::sampled_max(F, r, samples);
  while (true) {
    const int next = 2 * samples;
    if (next > cap) {
      est.samples = samples;
      est.value = prev;
      est.refined = false;
      return est;
    }
    const double cur = detail::sampled_max(F, r, next);
    if (std::abs(cur - prev) <= 1e-9 * (1.0 + cur)) {
      est.samples = next;
      est.value = std::max(cur, prev);
      est.refined = true;
      return est;
    }
    prev = cur;
    samples = next;
  }
}

// ---------------------------------------------------------------------------
// Gruss functional on disks

inline void check_working_radius(double r, const PowerSeries& f, const PowerSeries& g) {
  if (!(r >= 1.0)) throw invalid_input("radius r = " + std::to_string(r) + " below 1");
  if (!(r < std::min(f.radius(), g.radius()))) throw invalid_input("radius r outside the common disk of convergence");
  if (!f.is_exact() && r > f.work_radius() * (1 + 1e-12)) throw invalid_input("radius r exceeds the working radius of f");
  if (!g.is_exact() && r > g.work_radius() * (1 + 1e-12)) throw invalid_input("radius r exceeds the working radius of g");
}

/// Polynomials L_n(fg), L_n(f), L_n(g) and the correction c z(1-z) f'(z) g'(z) / n.
class ComplexGruss {
 public:
  ComplexGruss(ComplexFamily family, const PowerSeries& f, const PowerSeries& g, int n)
      : family_(family), n_(n), f_(f), g_(g), df_(ps_derivative(f)), dg_(ps_derivative(g)) {
    const PowerSeries fg = ps_cauchy_product(f, g);
    const MonomialImages imgs(family, n, fg.degree());
    fg_img_ = imgs.image(fg);
    f_img_ = imgs.image(f);
    g_img_ = imgs.image(g);
  }

  /// T(f,g;z).
  cplx gruss(cplx z) const { return horner(fg_img_, z) - horner(f_img_, z) * horner(g_img_, z); }

  cplx correction(cplx z) const {
    const double c = family_ == ComplexFamily::bernstein ? 1.0 : 2.0;
    return c * z * (1.0 - z) * horner(df_.coeffs(), z) * horner(dg_.coeffs(), z) / static_cast<double>(n_);
  }

  cplx gv(cplx z) const { return gruss(z) - correction(z); }

  /// z(1-z) f'(z) g'(z).
  cplx floor_fn(cplx z) const { return z * (1.0 - z) * horner(df_.coeffs(), z) * horner(dg_.coeffs(), z); }

 private:
  ComplexFamily family_;
  int n_;
  PowerSeries f_, g_, df_, dg_;
  std::vector<cplx> fg_img_, f_img_, g_img_;
};

inline double gruss_norm(ComplexFamily family, const PowerSeries& f, const PowerSeries& g, int n, double r) {
  check_working_radius(r, f, g);
  const ComplexGruss cg(family, f, g, n);
  return sup_norm_disk([&](cplx z) { return cg.gruss(z); }, r).value;
}

inline double gv_residual_complex(ComplexFamily family, const PowerSeries& f, const PowerSeries& g, int n, double r) {
  check_working_radius(r, f, g);
  const ComplexGruss cg(family, f, g, n);
  return sup_norm_disk([&](cplx z) { return cg.gv(z); }, r).value;
}

namespace detail {

// Majorant of sum_m m^2 A_m r^m for the full (untruncated) series:
// with theta = r d/dr and S = alpha(r) beta(r), sum m^2 A_m r^m = theta^2 S
// = (theta^2 alpha) beta + 2 (theta alpha)(theta beta) + alpha (theta^2 beta),
// and each factor is the truncated moment plus its geometric tail majorant.
inline double abs_moment_sum(const PowerSeries& f, const PowerSeries& g, double r) {
  double a[3], b[3];
  for (int k = 0; k < 3; ++k) {
    a[k] = f.abs_moment(r, k) + f.tail_estimate(r, k);
    b[k] = g.abs_moment(r, k) + g.tail_estimate(r, k);
  }
  return a[2] * b[0] + 2.0 * a[1] * b[1] + a[0] * b[2];
}

}  // namespace detail

/// 6(1+r)/n sum_m m^2 A_m r^{m-1}, tail-inclusive.
inline double gruss_bound_cbernstein(const PowerSeries& f, const PowerSeries& g, int n, double r) {
  check_working_radius(r, f, g);
  if (n < 1) throw invalid_input("gruss_bound_cbernstein: n must be >= 1");
  return 6.0 * (1.0 + r) / n * detail::abs_moment_sum(f, g, r) / r;
}

/// 4/n sum_m m^2 A_m r^m, tail-inclusive.
inline double gruss_bound_cdurrmeyer(const PowerSeries& f, const PowerSeries& g, int n, double r) {
  check_working_radius(r, f, g);
  if (n < 1) throw invalid_input("gruss_bound_cdurrmeyer: n must be >= 1");
  return 4.0 / n * detail::abs_moment_sum(f, g, r);
}

inline double gruss_bound(ComplexFamily family, const PowerSeries& f, const PowerSeries& g, int n, double r) {
  return family == ComplexFamily::bernstein ? gruss_bound_cbernstein(f, g, n, r) : gruss_bound_cdurrmeyer(f, g, n, r);
}

// ---------------------------------------------------------------------------
// Equivalence sweep

struct EquivalenceReport {
  ComplexFamily family = ComplexFamily::bernstein;
  double r = 1.0;
  std::vector<int> ns;
  std::vector<double> norms;          // |T_n|_r
  std::vector<double> residuals;      // |T_n - c z(1-z) f'g'/n|_r
  std::vector<double> upper_bound_values;
  RateFit fit;
  double fitted_exponent = 0.0;
  double floor_norm = 0.0;            // |e1(1-e1) f'g'|_r
  double K_hat = 0.0;
  bool degenerate = false;            // residual constant dominates the floor over the sweep
};

inline EquivalenceReport equivalence_sweep(ComplexFamily family, const PowerSeries& f, const PowerSeries& g, double r,
                                           const std::vector<int>& ns, int drop_smallest = 2) {
  if (f.is_constant() || g.is_constant()) throw invalid_input("equivalence undefined for constants");
  check_working_radius(r, f, g);
  EquivalenceReport rep;
  rep.family = family;
  rep.r = r;
  rep.ns = ns;
  double min_scaled = kInf;
  double max_n2_residual = 0.0;
  for (int n : ns) {
    const ComplexGruss cg(family, f, g, n);
    const double norm = sup_norm_disk([&](cplx z) { return cg.gruss(z); }, r).value;
    const double res = sup_norm_disk([&](cplx z) { return cg.gv(z); }, r).value;
    if (n == ns.front()) rep.floor_norm = sup_norm_disk([&](cplx z) { return cg.floor_fn(z); }, r).value;
    rep.norms.push_back(norm);
    rep.residuals.push_back(res);
    rep.upper_bound_values.push_back(gruss_bound(family, f, g, n, r));
    min_scaled = std::min(min_scaled, n * norm);
    max_n2_residual = std::max(max_n2_residual, static_cast<double>(n) * n * res);
  }
  std::vector<double> nd(ns.begin(), ns.end());
  rep.fit = fit_rate(nd, rep.norms, drop_smallest);
  rep.fitted_exponent = rep.fit.exponent;
  rep.K_hat = std::min(min_scaled, 0.5 * rep.floor_norm);
  // The floor only dominates once n exceeds C/floor; flag sweeps that never get there.
  rep.degenerate = rep.floor_norm <= max_n2_residual / static_cast<double>(ns.back()) || rep.fitted_exponent < -1.5;
  return rep;
}

}  // namespace gvlab
