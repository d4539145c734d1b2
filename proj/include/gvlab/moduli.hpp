#pragma once

// Moduli of smoothness omega_p(f; delta) on [0,1] and the least concave
// majorant of a sampled modulus. All values are grid surrogates of the true
// suprema and therefore under-estimates.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "gvlab/funcs.hpp"

namespace gvlab {

struct ModulusGrid {
  int points = 2049;  // uniform x-grid on [0,1]
  int steps = 512;    // step sizes h per delta
};

namespace detail {

inline double finite_difference(const std::function<double(double)>& f, int p, double x, double h) {
  static constexpr int binom[4][4] = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}};
  double s = 0.0;
  for (int i = 0; i <= p; ++i) {
    const double term = binom[p][i] * f(std::min(x + i * h, 1.0));
    s += ((p - i) % 2) ? -term : term;
  }
  return s;
}

inline void check_order(int p) {
  if (p < 1 || p > 3) throw invalid_input("modulus: order must be 1, 2 or 3");
}

}  // namespace detail

/// sup |Delta_h^p f(x)| over grid x and h = delta*j/steps, j = 1..steps, with x + p h <= 1.
inline double modulus(const std::function<double(double)>& f, int p, double delta, ModulusGrid grid = {}) {
  detail::check_order(p);
  if (!(delta >= 0.0)) throw invalid_input("modulus: delta must be nonnegative");
  if (grid.points < 2 || grid.steps < 1) throw invalid_input("modulus: grid too small");
  if (delta == 0.0) return 0.0;
  const double hmax = std::min(delta, 1.0 / p);
  double best = 0.0;
  std::vector<double> row;
  for (int i = 0; i < grid.points; ++i) {
    const double x = static_cast<double>(i) / (grid.points - 1);
    if (x >= 1.0) break;
    for (int j = 1; j <= grid.steps; ++j) {
      const double h = hmax * j / grid.steps;
      if (x + p * h > 1.0 + 1e-15) break;
      best = std::max(best, std::abs(detail::finite_difference(f, p, x, h)));
    }
  }
  return best;
}

/// omega_p sampled at delta_j = j/(points-1) with steps restricted to grid multiples.
struct ModulusTable {
  std::vector<double> deltas;
  std::vector<double> values;
  int order = 1;

  /// Value at the largest tabulated delta not exceeding `delta`.
  double at(double delta) const {
    if (!(delta >= 0.0)) throw invalid_input("ModulusTable: delta must be nonnegative");
    if (deltas.empty()) throw invalid_input("ModulusTable: empty table");
    const auto it = std::upper_bound(deltas.begin(), deltas.end(), delta * (1.0 + 1e-14));
    if (it == deltas.begin()) return 0.0;
    return values[static_cast<std::size_t>(it - deltas.begin()) - 1];
  }
};

inline ModulusTable modulus_table(const std::function<double(double)>& f, int p, int points = 2049) {
  detail::check_order(p);
  if (points < 2) throw invalid_input("modulus_table: grid too small");
  const int N = points - 1;
  std::vector<double> fx(points);
  for (int i = 0; i <= N; ++i) fx[i] = f(static_cast<double>(i) / N);
  ModulusTable t;
  t.order = p;
  t.deltas.resize(points);
  t.values.resize(points);
  double running = 0.0;
  for (int j = 0; j <= N; ++j) {
    t.deltas[j] = static_cast<double>(j) / N;
    if (j > 0 && p * j <= N) {
      double d = 0.0;
      for (int i = 0; i + p * j <= N; ++i) {
        double s;
        switch (p) {
          case 1: s = fx[i + j] - fx[i]; break;
          case 2: s = fx[i + 2 * j] - 2.0 * fx[i + j] + fx[i]; break;
          default: s = fx[i + 3 * j] - 3.0 * fx[i + 2 * j] + 3.0 * fx[i + j] - fx[i]; break;
        }
        d = std::max(d, std::abs(s));
      }
      running = std::max(running, d);
    }
    t.values[j] = running;
  }
  return t;
}

/// Upper concave envelope, evaluated by linear interpolation between knots.
struct ConcaveMajorant {
  std::vector<double> knot_x;
  std::vector<double> knot_y;

  double operator()(double delta) const {
    if (!(delta >= 0.0)) throw invalid_input("ConcaveMajorant: delta must be nonnegative");
    if (delta >= knot_x.back()) return knot_y.back();
    const auto it = std::upper_bound(knot_x.begin(), knot_x.end(), delta);
    const std::size_t hi = static_cast<std::size_t>(it - knot_x.begin());
    const std::size_t lo = hi - 1;
    const double t = (delta - knot_x[lo]) / (knot_x[hi] - knot_x[lo]);
    return knot_y[lo] + t * (knot_y[hi] - knot_y[lo]);
  }
};

/// Monotone-chain upper hull of {(delta_i, omega_i)} together with (0,0).
inline ConcaveMajorant least_concave_majorant(const ModulusTable& table) {
  if (table.deltas.empty() || table.deltas.size() != table.values.size())
    throw invalid_input("least_concave_majorant: empty or malformed table");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(table.deltas.size() + 1);
  pts.emplace_back(0.0, 0.0);
  for (std::size_t i = 0; i < table.deltas.size(); ++i)
    if (table.deltas[i] > 0.0) pts.emplace_back(table.deltas[i], table.values[i]);
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<double, double>> hull;
  for (const auto& p : pts) {
    if (!hull.empty() && p.first == hull.back().first) {
      hull.back().second = std::max(hull.back().second, p.second);
      continue;
    }
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      const double cross = (a.first - o.first) * (p.second - o.second) - (a.second - o.second) * (p.first - o.first);
      if (cross >= 0.0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  ConcaveMajorant m;
  for (const auto& [x, y] : hull) {
    m.knot_x.push_back(x);
    m.knot_y.push_back(y);
  }
  if (m.knot_x.size() == 1) {
    // Only the origin: a flat zero majorant on [0, 1].
    m.knot_x.push_back(1.0);
    m.knot_y.push_back(0.0);
  }
  return m;
}

/// Majorant evaluated on two grids; the difference discloses grid resolution.
struct MajorantPair {
  ConcaveMajorant coarse;
  ConcaveMajorant fine;

  double value(double delta) const { return fine(delta); }
  double slack(double delta) const { return std::abs(fine(delta) - coarse(delta)); }
};

inline MajorantPair omega1_majorant(const std::function<double(double)>& f, int points = 2049) {
  return {least_concave_majorant(modulus_table(f, 1, points)),
          least_concave_majorant(modulus_table(f, 1, 2 * (points - 1) + 1))};
}

}  // namespace gvlab
