#pragma once

// Exterior conformal maps of the catalog domains, Faber polynomials, Faber
// coefficients, the Cauchy transform F and Bernstein-Faber polynomials.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gvlab/complex_ops.hpp"
#include "gvlab/funcs.hpp"

namespace gvlab {

enum class MapKind { disk, hypocycloid, star, lemniscate, semidisk };

/// Psi: {|w| > 1} -> exterior of the domain, Psi(w) = c w + b_0 + b_1/w + ...
class ConformalMap {
 public:
  static ConformalMap disk() { return ConformalMap(MapKind::disk, 1); }
  static ConformalMap hypocycloid(int m) {
    if (m < 2) throw invalid_input("hypocycloid: m must be >= 2");
    return ConformalMap(MapKind::hypocycloid, m);
  }
  static ConformalMap star(int m) {
    if (m < 2) throw invalid_input("star: m must be >= 2");
    return ConformalMap(MapKind::star, m);
  }
  static ConformalMap lemniscate(int m) {
    if (m < 1) throw invalid_input("lemniscate: m must be >= 1");
    return ConformalMap(MapKind::lemniscate, m);
  }
  /// Right half of the closed unit disk.
  static ConformalMap semidisk() { return ConformalMap(MapKind::semidisk, 1); }

  /// "disk", "semidisk", "hypocycloid:m", "star:m", "lemniscate:m".
  static ConformalMap parse(const std::string& spec) {
    if (spec == "disk") return disk();
    if (spec == "semidisk") return semidisk();
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw invalid_input("unknown domain '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(spec.substr(colon + 1), &used);
      if (used != spec.size() - colon - 1) throw invalid_input("");
    } catch (const std::exception&) {
      throw invalid_input("bad order in domain '" + spec + "'");
    }
    if (kind == "hypocycloid") return hypocycloid(m);
    if (kind == "star") return star(m);
    if (kind == "lemniscate") return lemniscate(m);
    throw invalid_input("unknown domain '" + spec + "'");
  }

  MapKind kind() const { return kind_; }
  int m() const { return m_; }

  std::string name() const {
    switch (kind_) {
      case MapKind::disk: return "disk";
      case MapKind::semidisk: return "semidisk";
      case MapKind::hypocycloid: return "hypocycloid:" + std::to_string(m_);
      case MapKind::star: return "star:" + std::to_string(m_);
      case MapKind::lemniscate: return "lemniscate:" + std::to_string(m_);
    }
    return "";
  }

  /// Leading coefficient c = lim Psi(w)/w.
  double capacity() const { return kind_ == MapKind::semidisk ? 4.0 / kSemidiskScale : 1.0; }

  /// Psi' has no zeros and the Laurent tail is finite (the map extends analytically across |w| = 1).
  bool finite_laurent() const { return kind_ == MapKind::disk || kind_ == MapKind::hypocycloid; }

  /// Psi(w) for |w| >= 1; boundary points are the continuous extension.
  cplx eval(cplx w) const {
    switch (kind_) {
      case MapKind::disk: return w;
      case MapKind::hypocycloid: return w + std::pow(w, 1 - m_) / static_cast<double>(m_ - 1);
      case MapKind::star:
      case MapKind::lemniscate: {
        const cplx v = std::pow(w, -m_);
        return w * std::pow(1.0 + v, alpha());
      }
      case MapKind::semidisk: {
        const cplx u = 1.0 / w;
        return w * semidisk_q(u) / kSemidiskScale;
      }
    }
    return {};
  }

  cplx derivative(cplx w) const {
    switch (kind_) {
      case MapKind::disk: return 1.0;
      case MapKind::hypocycloid: return 1.0 - std::pow(w, -m_);
      case MapKind::star:
      case MapKind::lemniscate: {
        const cplx v = std::pow(w, -m_);
        const double a = alpha();
        return std::pow(1.0 + v, a - 1.0) * ((1.0 + v) - m_ * a * v);
      }
      case MapKind::semidisk: {
        // Psi = w Q(u)/k with u = 1/w, so Psi' = (Q(u) - u Q'(u))/k.
        const cplx u = 1.0 / w;
        return (semidisk_q(u) - u * semidisk_dq(u)) / kSemidiskScale;
      }
    }
    return {};
  }

  /// Exponent of (1 + w^{-m}) for star and lemniscate maps.
  double alpha() const {
    if (kind_ == MapKind::star) return 2.0 / m_;
    if (kind_ == MapKind::lemniscate) return 1.0 / m_;
    throw invalid_input("alpha: only star and lemniscate maps carry an exponent");
  }

  static constexpr double kSemidiskScale = 5.196152422706632;  // 3 sqrt(3)

 private:
  ConformalMap(MapKind k, int m) : kind_(k), m_(m) {}

  // (1 + u + u^2)^{3/2} as a product of principal powers of (1 - omega u)(1 - conj(omega) u).
  static cplx semidisk_s(cplx u) {
    const cplx om = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    return std::pow(1.0 - om * u, 1.5) * std::pow(1.0 - std::conj(om) * u, 1.5);
  }
  static cplx semidisk_p(cplx u) { return 2.0 - 2.0 * u * u * u + 3.0 * u - 3.0 * u * u + 2.0 * semidisk_s(u); }
  static cplx semidisk_dp(cplx u) {
    const cplx s = semidisk_s(u);
    const cplx ds = 1.5 * s * (1.0 + 2.0 * u) / (1.0 + u + u * u);
    return -6.0 * u * u + 3.0 - 6.0 * u + 2.0 * ds;
  }
  // Q(u) = P(u)/(1+u); the zero of 1+u at u = -1 is removable.
  static cplx semidisk_q(cplx u) {
    if (std::abs(1.0 + u) < 1e-12) return semidisk_dp(u);
    return semidisk_p(u) / (1.0 + u);
  }
  static cplx semidisk_dq(cplx u) {
    const cplx d = 1.0 + u;
    return (semidisk_dp(u) * d - semidisk_p(u)) / (d * d);
  }

  MapKind kind_;
  int m_;
};

/// Psi(w) for |w| > 1.
inline cplx psi_eval(const ConformalMap& map, cplx w) {
  if (!(std::abs(w) > 1.0)) throw invalid_input("psi_eval: |w| must exceed 1");
  return map.eval(w);
}

namespace detail {

// Coefficients of p(u)^a for a power series p with p(0) = 1, from p h' = a p' h.
inline std::vector<double> series_power(const std::vector<double>& p, double a, int K) {
  std::vector<double> h(K + 1, 0.0);
  h[0] = 1.0;
  for (int n = 1; n <= K; ++n) {
    // n h_n = sum_{j=1}^{n} (a j - (n - j)) p_j h_{n-j}
    double s = 0.0;
    for (int j = 1; j <= n && j < static_cast<int>(p.size()); ++j) s += (a * j - (n - j)) * p[j] * h[n - j];
    h[n] = s / n;
  }
  return h;
}

// Generalized binomial coefficient C(a, j).
inline double binom_real(double a, int j) {
  double c = 1.0;
  for (int i = 0; i < j; ++i) c *= (a - i) / (i + 1);
  return c;
}

// b_0..b_K from samples of Psi(w) - c w on |w| = rho.
inline std::vector<cplx> laurent_fourier(const ConformalMap& map, int K, double rho, int samples) {
  std::vector<cplx> b(K + 1, cplx{0.0});
  const double c = map.capacity();
  for (int j = 0; j < samples; ++j) {
    const double t = 2.0 * std::numbers::pi * (j + 0.5) / samples;
    const cplx w = std::polar(rho, t);
    const cplx v = map.eval(w) - c * w;
    for (int k = 0; k <= K; ++k) b[k] += v * std::polar(std::pow(rho, k), k * t);
  }
  for (auto& x : b) x /= static_cast<double>(samples);
  return b;
}

}  // namespace detail

/// b_0..b_K of Psi(w) = c w + b_0 + sum_k b_k w^{-k}: binomial series for the
/// (1 + w^{-m})^alpha maps, power-series algebra in u = 1/w for the semidisk.
/// Low orders are cross-checked against a Fourier expansion on |w| = 2.
inline std::vector<cplx> laurent_coeffs(const ConformalMap& map, int K) {
  if (K < 0) throw invalid_input("laurent_coeffs: K must be >= 0");
  std::vector<cplx> b(K + 1, cplx{0.0});
  const int m = map.m();
  switch (map.kind()) {
    case MapKind::disk: break;
    case MapKind::hypocycloid:
      if (m - 1 <= K) b[m - 1] = 1.0 / (m - 1);
      break;
    case MapKind::star:
    case MapKind::lemniscate: {
      // w (1 + w^{-m})^alpha = sum_j C(alpha, j) w^{1 - m j}
      const double a = map.alpha();
      for (int j = 1; m * j - 1 <= K; ++j) b[m * j - 1] = detail::binom_real(a, j);
      break;
    }
    case MapKind::semidisk: {
      // Psi = (w/k) Q(u), Q = [2 + 3u - 3u^2 - 2u^3 + 2 (1 + u + u^2)^{3/2}] / (1 + u).
      const auto s = detail::series_power({1.0, 1.0, 1.0}, 1.5, K + 1);
      std::vector<double> p(K + 2, 0.0);
      for (int j = 0; j <= K + 1; ++j) p[j] = 2.0 * s[j];
      p[0] += 2.0;
      if (K + 1 >= 1) p[1] += 3.0;
      if (K + 1 >= 2) p[2] -= 3.0;
      if (K + 1 >= 3) p[3] -= 2.0;
      std::vector<double> q(K + 2, 0.0);
      for (int j = 0; j <= K + 1; ++j) q[j] = p[j] - (j > 0 ? q[j - 1] : 0.0);
      for (int k = 0; k <= K; ++k) b[k] = q[k + 1] / ConformalMap::kSemidiskScale;
      break;
    }
  }
  const int Kc = std::min(K, 16);
  const auto bf = detail::laurent_fourier(map, Kc, 2.0, 1024);
  for (int k = 0; k <= Kc; ++k)
    if (std::abs(bf[k] - b[k]) > 1e-9 * (1.0 + std::abs(b[k])))
      throw invalid_input("laurent_coeffs: series and Fourier expansions disagree at order " + std::to_string(k) +
                          " for " + map.name());
  // Coefficients of a map analytic for |w| > 1 grow at most polynomially.
  for (int k = 1; k <= K; ++k)
    if (!(std::abs(b[k]) <= 10.0 * (k + 1) * (k + 1)))
      throw invalid_input("laurent_coeffs: non-decaying coefficients for " + map.name());
  return b;
}

/// F_0..F_M in the monomial basis, with pointwise evaluation by the recurrence
/// c F_{k+1} = (z - b_0) F_k - sum_{i=1}^{k} b_i F_{k-i} - k b_k.
class FaberBasis {
 public:
  static constexpr int kOracleOrder = 24;
  static constexpr int kOraclePoints = 64;
  static constexpr double kOracleTol = 1e-8;

  FaberBasis(const ConformalMap& map, int M) : map_(map), M_(M) {
    if (M < 0) throw invalid_input("FaberBasis: M must be >= 0");
    b_ = laurent_coeffs(map, std::max(M, 1));
    const double c = map.capacity();
    polys_.push_back({cplx{1.0}});
    for (int k = 0; k < M; ++k) {
      std::vector<cplx> next(k + 2, cplx{0.0});
      const auto& fk = polys_[k];
      for (std::size_t i = 0; i < fk.size(); ++i) {
        next[i + 1] += fk[i];
        next[i] -= b_[0] * fk[i];
      }
      for (int i = 1; i <= k; ++i) {
        const auto& f = polys_[k - i];
        for (std::size_t j = 0; j < f.size(); ++j) next[j] -= b_[i] * f[j];
      }
      next[0] -= static_cast<double>(k) * b_[k];
      for (auto& v : next) v /= c;
      polys_.push_back(std::move(next));
    }
    if (map.kind() == MapKind::disk) {
      for (int p = 0; p <= M; ++p)
        for (int j = 0; j <= p; ++j)
          if (polys_[p][j] != cplx{j == p ? 1.0 : 0.0}) throw std::logic_error("FaberBasis: disk basis is not monomial");
    }
    oracle_error_ = verify();
  }

  const ConformalMap& map() const { return map_; }
  int order() const { return M_; }
  const std::vector<std::vector<cplx>>& polys() const { return polys_; }
  const std::vector<cplx>& laurent() const { return b_; }
  /// Largest relative recurrence-vs-oracle discrepancy found at construction.
  double oracle_error() const { return oracle_error_; }

  /// F_0(z)..F_upto(z) by the recurrence.
  std::vector<cplx> values(cplx z, int upto) const {
    if (upto > M_) throw invalid_input("FaberBasis: requested order exceeds the basis");
    std::vector<cplx> F(upto + 1);
    F[0] = 1.0;
    const double c = map_.capacity();
    for (int k = 0; k < upto; ++k) {
      cplx s = (z - b_[0]) * F[k] - static_cast<double>(k) * b_[k];
      for (int i = 1; i <= k; ++i) s -= b_[i] * F[k - i];
      F[k + 1] = s / c;
    }
    return F;
  }

  /// F_p(z) for p <= min(M, kOracleOrder) from the expansion of Psi'(w)/(Psi(w) - z) on |w| = 2.
  static std::vector<cplx> oracle_values(const ConformalMap& map, cplx z, int upto, int samples = 512) {
    std::vector<cplx> F(upto + 1, cplx{0.0});
    for (int j = 0; j < samples; ++j) {
      const double t = 2.0 * std::numbers::pi * j / samples;
      const cplx w = std::polar(2.0, t);
      const cplx g = map.derivative(w) / (map.eval(w) - z);
      cplx wp = w;
      for (int n = 0; n <= upto; ++n) {
        F[n] += g * wp;
        wp *= w;
      }
    }
    for (auto& v : F) v /= static_cast<double>(samples);
    return F;
  }

  nlohmann::json to_json() const {
    nlohmann::json polys = nlohmann::json::array();
    for (const auto& p : polys_) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& v : p) coeffs.push_back({v.real(), v.imag()});
      polys.push_back(coeffs);
    }
    return {{"domain", map_.name()}, {"order", M_}, {"capacity", map_.capacity()}, {"polynomials", polys}};
  }

 private:
  // Recurrence values against the oracle (relative 1e-8), then the monomial
  // coefficients against the recurrence within Horner's rounding bound
  // 4p eps sum |c_j| |z|^j: for maps centred away from 0 (lemniscate:1 is
  // w + 1) the monomial form of F_p is ill-conditioned, not wrong.
  double verify() const {
    const int upto = std::min(M_, kOracleOrder);
    double worst = 0.0;
    for (int j = 0; j < kOraclePoints; ++j) {
      const cplx z = map_.eval(std::polar(1.25, 2.0 * std::numbers::pi * (j + 0.5) / kOraclePoints));
      const auto want = oracle_values(map_, z, upto);
      const auto rec = values(z, upto);
      for (int p = 0; p <= upto; ++p) {
        const double err = std::abs(rec[p] - want[p]) / std::max(1.0, std::abs(want[p]));
        worst = std::max(worst, err);
        if (err > kOracleTol)
          throw std::runtime_error("FaberBasis: recurrence disagrees with the generating-function oracle for " +
                                   map_.name() + " at p = " + std::to_string(p) + " (relative error " +
                                   std::to_string(err) + ")");
        double mag = 0.0, zp = 1.0;
        for (const auto& c : polys_[p]) {
          mag += std::abs(c) * zp;
          zp *= std::abs(z);
        }
        const double herr = std::abs(horner(polys_[p], z) - rec[p]);
        if (herr > kOracleTol * std::max(1.0, std::abs(rec[p])) + 4.0 * (p + 1) * 2.220446049250313e-16 * mag)
          throw std::runtime_error("FaberBasis: monomial coefficients of F_" + std::to_string(p) + " for " +
                                   map_.name() + " disagree with the recurrence");
      }
    }
    return worst;
  }

  ConformalMap map_;
  int M_;
  std::vector<cplx> b_;
  std::vector<std::vector<cplx>> polys_;
  double oracle_error_ = 0.0;
};

/// Monomial coefficients of F_0..F_M (oracle-verified).
inline FaberBasis faber_basis(const ConformalMap& map, int M) { return FaberBasis(map, M); }

// ---------------------------------------------------------------------------
// Faber coefficients and the Cauchy transform

struct FaberCoefficients {
  std::vector<cplx> a;        // a_0..a_N
  int boundary_grid = 0;      // samples used
  double contour_radius = 1;  // |u| of the sampling circle
  double refinement_change = 0.0;
  bool converged = true;
};

/// Contour radius for the coefficient integrals: the integrand f(Psi(u)) u^{-n-1}
/// is analytic for |u| > 1, so any radius gives the same a_n; maps with
/// boundary singularities are sampled off the unit circle.
inline double faber_contour_radius(const ConformalMap& map) { return map.finite_laurent() ? 1.0 : 1.25; }

namespace detail {

inline std::vector<cplx> faber_trapezoid(const std::function<cplx(cplx)>& fpsi, double rho, int samples, int K) {
  std::vector<cplx> a(K + 1, cplx{0.0});
  std::vector<cplx> vals(samples);
  for (int j = 0; j < samples; ++j) vals[j] = fpsi(std::polar(rho, 2.0 * std::numbers::pi * (j + 0.5) / samples));
  for (int n = 0; n <= K; ++n) {
    cplx s{0.0};
    for (int j = 0; j < samples; ++j) s += vals[j] * std::polar(1.0, -2.0 * std::numbers::pi * n * (j + 0.5) / samples);
    a[n] = s / static_cast<double>(samples) / std::pow(rho, n);
  }
  return a;
}

}  // namespace detail

inline constexpr int kFaberMaxOrder = 256;

/// a_n = (1/2 pi i) int f(Psi(u)) u^{-n-1} du by the half-step-offset trapezoid
/// rule. The grid doubles from 1024 until a_0..a_K move by < 1e-10; the order N
/// is two past the last index with |a_n| >= 1e-12 max|a|, capped at 256.
/// `fpsi` receives u on the contour and returns f(Psi(u)).
inline FaberCoefficients faber_coefficients_of(const std::function<cplx(cplx)>& fpsi, const ConformalMap& map,
                                               int max_order = kFaberMaxOrder) {
  const double rho = faber_contour_radius(map);
  const int K = std::min(max_order, kFaberMaxOrder);
  FaberCoefficients out;
  out.contour_radius = rho;
  int samples = 512;
  auto prev = detail::faber_trapezoid(fpsi, rho, samples, K);
  while (true) {
    const auto cur = detail::faber_trapezoid(fpsi, rho, 2 * samples, K);
    double change = 0.0;
    for (int n = 0; n <= K; ++n) change = std::max(change, std::abs(cur[n] - prev[n]));
    samples *= 2;
    prev = cur;
    out.refinement_change = change;
    if (change < 1e-10) break;
    if (samples >= 16384) {
      out.converged = false;
      break;
    }
  }
  double amax = 0.0;
  for (const auto& v : prev) amax = std::max(amax, std::abs(v));
  // N is the first index past the last significant coefficient L at which
  // |a_N| + |a_{N-1}| < 1e-12 max|a|, i.e. N = L + 2. Interior zeros (odd or
  // even functions, monomials) do not stop the scan.
  int N = 0;
  for (int n = K; n >= 0; --n)
    if (std::abs(prev[n]) >= 1e-12 * amax && amax > 0.0) {
      N = std::min(K, n + 2);
      break;
    }
  prev.resize(N + 1);
  for (auto& v : prev)
    if (std::abs(v) < 1e-15 * std::max(1.0, amax)) v = 0.0;
  out.a = std::move(prev);
  out.boundary_grid = samples;
  return out;
}

inline FaberCoefficients faber_coefficients(const PowerSeries& f, const ConformalMap& map,
                                            int max_order = kFaberMaxOrder) {
  return faber_coefficients_of([&](cplx u) { return ps_eval(f, map.eval(u)); }, map, max_order);
}

/// F(w) = sum_k a_k w^k for |w| <= 1.
inline cplx cauchy_F(const FaberCoefficients& coeffs, cplx w) {
  if (!(std::abs(w) <= 1.0 + 1e-15)) throw invalid_input("cauchy_F: |w| must not exceed 1");
  if (std::abs(w) > 1.0 - 1e-12 && !coeffs.converged)
    throw invalid_input("cauchy_F: coefficient series not certified on the unit circle");
  return horner(coeffs.a, w);
}

/// (1/2 pi i) int f(Psi(u))/(u - w) du on the coefficient contour, trapezoid rule.
inline cplx cauchy_F_quadrature(const PowerSeries& f, const ConformalMap& map, cplx w, int samples = 2048) {
  if (!(std::abs(w) < 1.0)) throw invalid_input("cauchy_F_quadrature: |w| must be below 1");
  const double rho = faber_contour_radius(map);
  cplx s{0.0};
  for (int j = 0; j < samples; ++j) {
    const cplx u = std::polar(rho, 2.0 * std::numbers::pi * (j + 0.5) / samples);
    s += ps_eval(f, map.eval(u)) * u / (u - w);
  }
  return s / static_cast<double>(samples);
}

// ---------------------------------------------------------------------------
// Bernstein-Faber polynomials

/// Coefficients d_p of B_n(f; G) = sum_p d_p F_p: the monomial coefficients of
/// B_n(sum_k a_k e_k), i.e. d_p = sum_k a_k S(n,p,k).
inline std::vector<cplx> bernstein_faber_weights(const FaberCoefficients& coeffs, int n) {
  if (n < 1) throw invalid_input("bernstein_faber: n must be >= 1");
  const PowerSeries series = PowerSeries::polynomial(coeffs.a);
  const MonomialImages imgs(ComplexFamily::bernstein, n, series.degree());
  return imgs.image(series);
}

inline cplx faber_sum(const std::vector<cplx>& d, const std::vector<cplx>& F) {
  cplx s{0.0};
  for (std::size_t p = 0; p < d.size(); ++p) s += d[p] * F[p];
  return s;
}

inline cplx bernstein_faber_eval(const FaberCoefficients& coeffs, const FaberBasis& basis, int n, cplx z) {
  const auto d = bernstein_faber_weights(coeffs, n);
  if (static_cast<int>(d.size()) - 1 > basis.order()) throw invalid_input("bernstein_faber_eval: basis order too small");
  return faber_sum(d, basis.values(z, static_cast<int>(d.size()) - 1));
}

inline cplx bernstein_faber_eval(const PowerSeries& f, const ConformalMap& map, int n, cplx z) {
  const auto coeffs = faber_coefficients(f, map);
  const FaberBasis basis(map, std::min(n, static_cast<int>(coeffs.a.size()) - 1));
  return bernstein_faber_eval(coeffs, basis, n, z);
}

/// Psi(r e^{i theta_j}) on the level curve, half-step offset.
inline std::vector<cplx> level_curve_points(const ConformalMap& map, double r = 1.2, int count = 512) {
  if (!(r > 1.0)) throw invalid_input("level_curve_points: r must exceed 1");
  std::vector<cplx> z(count);
  for (int j = 0; j < count; ++j) z[j] = map.eval(std::polar(r, 2.0 * std::numbers::pi * (j + 0.5) / count));
  return z;
}

/// Shared state for the Gruss checks on a Faber domain: coefficients of f, g
/// and fg (boundary product) and a basis long enough for all of them.
class FaberGruss {
 public:
  FaberGruss(const PowerSeries& f, const PowerSeries& g, const ConformalMap& map)
      : f_(f), g_(g), map_(map), af_(faber_coefficients(f, map)), ag_(faber_coefficients(g, map)),
        afg_(faber_coefficients_of([&](cplx u) {
               const cplx z = map.eval(u);
               return ps_eval(f, z) * ps_eval(g, z);
             }, map)),
        basis_(map, std::max({1, static_cast<int>(af_.a.size()), static_cast<int>(ag_.a.size()),
                              static_cast<int>(afg_.a.size())})) {}

  const FaberCoefficients& coeffs_f() const { return af_; }
  const FaberCoefficients& coeffs_g() const { return ag_; }
  const FaberCoefficients& coeffs_fg() const { return afg_; }
  const FaberBasis& basis() const { return basis_; }

  /// B_n(fg) - B_n(f) B_n(g) at each point.
  std::vector<cplx> gruss(int n, const std::vector<cplx>& zs) const {
    const auto dfg = bernstein_faber_weights(afg_, n);
    const auto df = bernstein_faber_weights(af_, n);
    const auto dg = bernstein_faber_weights(ag_, n);
    const int top = static_cast<int>(std::max({dfg.size(), df.size(), dg.size()})) - 1;
    std::vector<cplx> out;
    out.reserve(zs.size());
    for (const auto& z : zs) {
      const auto F = basis_.values(z, top);
      out.push_back(faber_sum(dfg, F) - faber_sum(df, F) * faber_sum(dg, F));
    }
    return out;
  }

  /// sum_{k>=2} k(k-1)/(2n) [F_{k-1}(z) - F_k(z)] [a_k(fg) - f(z) a_k(g) - g(z) a_k(f)].
  std::vector<cplx> correction(int n, const std::vector<cplx>& zs) const {
    const int K = basis_.order();
    std::vector<cplx> out;
    out.reserve(zs.size());
    auto at = [](const FaberCoefficients& c, int k) { return k < static_cast<int>(c.a.size()) ? c.a[k] : cplx{0.0}; };
    for (const auto& z : zs) {
      const auto F = basis_.values(z, K);
      const cplx fz = ps_eval(f_, z), gz = ps_eval(g_, z);
      cplx s{0.0};
      for (int k = 2; k <= K; ++k) {
        const cplx bracket = at(afg_, k) - fz * at(ag_, k) - gz * at(af_, k);
        s += 0.5 * k * (k - 1.0) * (F[k - 1] - F[k]) * bracket;
      }
      out.push_back(s / static_cast<double>(n));
    }
    return out;
  }

 private:
  PowerSeries f_, g_;
  ConformalMap map_;
  FaberCoefficients af_, ag_, afg_;
  FaberBasis basis_;
};

inline double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

/// max over zs of |B_n(fg) - B_n(f) B_n(g)|.
inline double gruss_faber(const FaberGruss& fg, int n, const std::vector<cplx>& zs) { return max_abs(fg.gruss(n, zs)); }

/// max over zs of |B_n(fg) - B_n(f) B_n(g) - correction|.
inline double gv_residual_faber(const FaberGruss& fg, int n, const std::vector<cplx>& zs) {
  const auto t = fg.gruss(n, zs);
  const auto c = fg.correction(n, zs);
  double m = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) m = std::max(m, std::abs(t[i] - c[i]));
  return m;
}

}  // namespace gvlab
