#pragma once

// Exact rational polynomials and the exact monomial images / moments of the
// Bernstein and Paltanea operators.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gvlab/funcs.hpp"

namespace gvlab {

using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

/// Polynomial with exact rational coefficients in the monomial basis.
/// Always normalized: no trailing zero coefficients except the zero polynomial [0].
class ExactPolynomial {
 public:
  ExactPolynomial() : c_{rational(0)} {}
  explicit ExactPolynomial(std::vector<rational> c) : c_(std::move(c)) { normalize(); }

  static ExactPolynomial monomial(int k, rational coeff = 1) {
    std::vector<rational> c(k + 1, rational(0));
    c[k] = std::move(coeff);
    return ExactPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<rational>& coeffs() const { return c_; }
  rational coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : rational(0); }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }

  ExactPolynomial derivative() const {
    if (degree() == 0) return {};
    std::vector<rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<int>(i);
    return ExactPolynomial(std::move(d));
  }

  friend ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
    std::vector<rational> c(std::max(a.c_.size(), b.c_.size()), rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return ExactPolynomial(std::move(c));
  }
  friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) { return a + b * rational(-1); }
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
    std::vector<rational> c(a.c_.size() + b.c_.size() - 1, rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return ExactPolynomial(std::move(c));
  }
  friend ExactPolynomial operator*(const ExactPolynomial& a, const rational& s) {
    std::vector<rational> c = a.c_;
    for (auto& v : c) v *= s;
    return ExactPolynomial(std::move(c));
  }
  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) { return a.c_ == b.c_; }

  rational operator()(const rational& x) const {
    rational s = 0;
    for (std::size_t i = c_.size(); i-- > 0;) s = s * x + c_[i];
    return s;
  }

  double eval(double x) const {
    double s = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) s = s * x + static_cast<double>(c_[i]);
    return s;
  }

  cplx eval(cplx z) const {
    cplx s{0.0};
    for (std::size_t i = c_.size(); i-- > 0;) s = s * z + static_cast<double>(c_[i]);
    return s;
  }

  std::vector<double> to_double() const {
    std::vector<double> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(static_cast<double>(v));
    return out;
  }

  /// JSON array of [numerator, denominator] strings.
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : c_)
      arr.push_back({boost::multiprecision::numerator(v).str(), boost::multiprecision::denominator(v).str()});
    return arr;
  }

  static ExactPolynomial from_json(const nlohmann::json& j) {
    std::vector<rational> c;
    for (const auto& pair : j) {
      if (!pair.is_array() || pair.size() != 2) throw invalid_input("ExactPolynomial: expected [num, den] pairs");
      const bigint num(pair[0].get<std::string>());
      const bigint den(pair[1].get<std::string>());
      if (den == 0) throw invalid_input("ExactPolynomial: zero denominator");
      c.emplace_back(num, den);
    }
    if (c.empty()) throw invalid_input("ExactPolynomial: empty coefficient list");
    return ExactPolynomial(std::move(c));
  }

 private:
  void normalize() {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    if (c_.empty()) c_.emplace_back(0);
  }

  std::vector<rational> c_;
};

inline bigint binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  bigint b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

/// Exact rational from a double (binary fractions are exact).
inline rational to_rational(double v) { return rational(v); }

/// B_n(e_k) in the monomial basis via B_n(e_{k+1}) = x(1-x)/n B_n(e_k)' + x B_n(e_k).
inline ExactPolynomial bernstein_monomial_image(int n, int k) {
  if (n < 1) throw invalid_input("bernstein_monomial_image: n must be >= 1");
  if (k < 0) throw invalid_input("bernstein_monomial_image: k must be >= 0");
  const ExactPolynomial x = ExactPolynomial::monomial(1);
  const ExactPolynomial x_1mx_over_n(std::vector<rational>{rational(0), rational(1, n), rational(-1, n)});
  ExactPolynomial img = ExactPolynomial::monomial(0);
  for (int j = 0; j < k; ++j) img = x_1mx_over_n * img.derivative() + x * img;
  return img;
}

/// All images B_n(e_0..e_kmax) from one pass of the recurrence.
inline std::vector<ExactPolynomial> bernstein_monomial_images(int n, int kmax) {
  if (n < 1 || kmax < 0) throw invalid_input("bernstein_monomial_images: need n >= 1, kmax >= 0");
  const ExactPolynomial x = ExactPolynomial::monomial(1);
  const ExactPolynomial x_1mx_over_n(std::vector<rational>{rational(0), rational(1, n), rational(-1, n)});
  std::vector<ExactPolynomial> out{ExactPolynomial::monomial(0)};
  for (int j = 0; j < kmax; ++j) out.push_back(x_1mx_over_n * out.back().derivative() + x * out.back());
  return out;
}

/// S(n,p,k) = C(n,p) * Delta^p_{1/n} e_k(0), the forward-difference form of the
/// monomial-basis coefficient of x^p in B_n(e_k).
inline rational forward_difference_coefficient(int n, int p, int k) {
  if (p < 0 || p > n) return 0;
  rational delta = 0;
  for (int i = 0; i <= p; ++i) {
    const bigint num = boost::multiprecision::pow(bigint(i), static_cast<unsigned>(k));
    const bigint den = boost::multiprecision::pow(bigint(n), static_cast<unsigned>(k));
    rational term(binomial(p, i) * num, den);
    if ((p - i) % 2) delta -= term;
    else delta += term;
  }
  return rational(binomial(n, p)) * delta;
}

/// int t^m mu^rho_{n,k}(t) dt = prod_{i<m} (k rho + i) / (n rho + i).
///
/// k = 0 and k = n give the endpoint functionals f(0), f(1).
inline rational paltanea_monomial_moment(int n, const rational& rho, int k, int m) {
  if (n < 1) throw invalid_input("paltanea_monomial_moment: n must be >= 1");
  if (k < 0 || k > n) throw invalid_input("paltanea_monomial_moment: k out of range");
  if (rho <= 0) throw invalid_input("paltanea_monomial_moment: rho must be positive");
  if (m < 0) throw invalid_input("paltanea_monomial_moment: m must be >= 0");
  rational out = 1;
  for (int i = 0; i < m; ++i) out *= (rho * k + i) / (rho * n + i);
  return out;
}

inline double paltanea_monomial_moment(int n, double rho, int k, int m) {
  if (n < 1 || k < 0 || k > n || !(rho > 0.0) || m < 0) throw invalid_input("paltanea_monomial_moment: bad arguments");
  double out = 1.0;
  for (int i = 0; i < m; ++i) out *= (rho * k + i) / (rho * n + i);
  return out;
}

/// phi_m(t) = prod_{i<m} (n rho t + i)/(n rho + i); U_n^rho(e_m) = B_n(phi_m)
/// because phi_m(k/n) is the k-th moment functional.
inline ExactPolynomial paltanea_node_polynomial(int n, const rational& rho, int m) {
  ExactPolynomial phi = ExactPolynomial::monomial(0);
  for (int i = 0; i < m; ++i) {
    const rational den = rho * n + i;
    phi = phi * ExactPolynomial(std::vector<rational>{rational(i) / den, rho * n / den});
  }
  return phi;
}

/// U_n^rho applied to an exact polynomial.
inline ExactPolynomial paltanea_image(int n, const rational& rho, const ExactPolynomial& f) {
  if (rho <= 0) throw invalid_input("paltanea_image: rho must be positive");
  const auto bimg = bernstein_monomial_images(n, f.degree());
  ExactPolynomial out;
  for (int m = 0; m <= f.degree(); ++m) {
    if (f.coeff(m) == 0) continue;
    const ExactPolynomial phi = paltanea_node_polynomial(n, rho, m);
    ExactPolynomial um;
    for (int j = 0; j <= phi.degree(); ++j)
      if (phi.coeff(j) != 0) um = um + bimg[j] * phi.coeff(j);
    out = out + um * f.coeff(m);
  }
  return out;
}

inline ExactPolynomial bernstein_image(int n, const ExactPolynomial& f) {
  const auto bimg = bernstein_monomial_images(n, f.degree());
  ExactPolynomial out;
  for (int m = 0; m <= f.degree(); ++m)
    if (f.coeff(m) != 0) out = out + bimg[m] * f.coeff(m);
  return out;
}

}  // namespace gvlab
