#pragma once

// Log-log rate fits and the bounded-over-sweep surrogate.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gvlab/funcs.hpp"

namespace gvlab {

struct RateFit {
  double exponent = 0.0;
  double log_constant = 0.0;
  double residual = 0.0;      // root-mean-square misfit in log space
  double n_min = 0.0;
  double n_max = 0.0;
  int points_used = 0;
  int zeros_excluded = 0;
  bool identically_zero = false;
};

/// Least-squares slope of log(value) against log(n), skipping the smallest
/// `drop_smallest` n values. Values below 1e-300 are excluded and counted.
inline RateFit fit_rate(const std::vector<double>& ns, const std::vector<double>& values, int drop_smallest = 0) {
  if (ns.size() != values.size()) throw invalid_input("fit_rate: ns and values differ in length");
  if (drop_smallest < 0) throw invalid_input("fit_rate: negative drop count");
  std::vector<std::size_t> idx(ns.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return ns[a] < ns[b]; });
  RateFit fit;
  std::vector<double> lx, ly;
  bool any_nonzero = false;
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const double v = values[idx[j]];
    if (!std::isfinite(v) || v < 0.0) throw invalid_input("fit_rate: values must be finite and nonnegative");
    if (v > 1e-300) any_nonzero = true;
    if (static_cast<int>(j) < drop_smallest) continue;
    if (!(ns[idx[j]] > 0.0)) throw invalid_input("fit_rate: n must be positive");
    if (v <= 1e-300) {
      ++fit.zeros_excluded;
      continue;
    }
    if (lx.empty()) fit.n_min = ns[idx[j]];
    fit.n_max = ns[idx[j]];
    lx.push_back(std::log(ns[idx[j]]));
    ly.push_back(std::log(v));
  }
  if (!any_nonzero) {
    fit.identically_zero = true;
    return fit;
  }
  if (lx.size() < 2) throw invalid_input("fit_rate: fewer than two usable points");
  const double m = static_cast<double>(lx.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw invalid_input("fit_rate: need at least two distinct n");
  fit.exponent = sxy / sxx;
  fit.log_constant = my - fit.exponent * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (fit.log_constant + fit.exponent * lx[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / m);
  fit.points_used = static_cast<int>(lx.size());
  return fit;
}

struct BoundedSweep {
  double split_n = 0.0;    // midpoint of [n_min, n_max]
  double lower_max = 0.0;  // max over n <= split_n
  double upper_max = 0.0;  // max over n > split_n
  double factor = 1.05;
  bool bounded = false;
};

/// max over the upper half of the n-range <= factor * max over the lower half.
inline BoundedSweep bounded_sweep(const std::vector<double>& ns, const std::vector<double>& values,
                                  double factor = 1.05) {
  if (ns.size() != values.size()) throw invalid_input("bounded_sweep: ns and values differ in length");
  if (values.size() < 2) throw invalid_input("bounded_sweep: need at least two values");
  const auto [lo, hi] = std::minmax_element(ns.begin(), ns.end());
  if (!(*hi > *lo)) throw invalid_input("bounded_sweep: need at least two distinct n");
  BoundedSweep b;
  b.factor = factor;
  b.split_n = 0.5 * (*lo + *hi);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw invalid_input("bounded_sweep: non-finite value");
    if (ns[i] <= b.split_n) b.lower_max = std::max(b.lower_max, values[i]);
    else b.upper_max = std::max(b.upper_max, values[i]);
  }
  b.bounded = b.upper_max <= factor * b.lower_max;
  return b;
}

}  // namespace gvlab
