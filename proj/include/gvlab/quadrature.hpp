#pragma once

// Gauss-Jacobi rules on [0,1] for the Beta weight t^beta (1-t)^alpha, built
// with the Golub-Welsch eigenvalue method, and an adaptive doubling driver.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "gvlab/funcs.hpp"

namespace gvlab {

struct QuadratureRule {
  std::vector<double> nodes;    // in [0,1]
  std::vector<double> weights;  // sum to 1 (normalized Beta weight)
};

/// n-point Gauss rule for the probability density proportional to
/// t^beta (1-t)^alpha on [0,1]; alpha, beta > -1.
inline QuadratureRule gauss_jacobi01(int n, double alpha, double beta) {
  if (n < 1) throw invalid_input("gauss_jacobi01: need at least one node");
  if (!(alpha > -1.0 && beta > -1.0)) throw invalid_input("gauss_jacobi01: exponents must exceed -1");
  // Monic Jacobi recurrence on [-1,1] for (1-x)^alpha (1+x)^beta.
  const double a = alpha;
  const double b = beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
  for (int j = 0; j < n; ++j) {
    const double s = 2.0 * j + a + b;
    diag(j) = (j == 0) ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int j = 1; j < n; ++j) {
    const double s = 2.0 * j + a + b;
    double beta_j;
    if (j == 1) beta_j = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
    else beta_j = 4.0 * j * (j + a) * (j + b) * (j + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    sub(j - 1) = std::sqrt(beta_j);
  }
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = 0.5 * (1.0 + diag(0));
    rule.weights[0] = 1.0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi01: eigen-solve failed");
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = std::clamp(0.5 * (1.0 + es.eigenvalues()(i)), 0.0, 1.0);
    const double v = es.eigenvectors()(0, i);
    rule.weights[i] = v * v;
    total += rule.weights[i];
  }
  for (auto& w : rule.weights) w /= total;
  return rule;
}

struct QuadratureResult {
  double value = 0.0;
  int nodes = 0;
  bool converged = true;
};

/// E[f(T)] for T ~ Beta(beta+1, alpha+1), doubling the node count from `start`
/// until two successive rules agree to `tol` (relative to 1 + |value|).
inline QuadratureResult beta_expectation(const std::function<double(double)>& f, double alpha, double beta,
                                         int start = 24, double tol = 1e-11, int max_nodes = 1536) {
  auto apply = [&](int n) {
    const QuadratureRule rule = gauss_jacobi01(n, alpha, beta);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += rule.weights[i] * f(rule.nodes[i]);
    return s;
  };
  QuadratureResult out;
  int n = start;
  double prev = apply(n);
  while (true) {
    const int next = 2 * n;
    const double cur = apply(next);
    if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) {
      out.value = cur;
      out.nodes = next;
      return out;
    }
    prev = cur;
    n = next;
    if (n >= max_nodes) {
      out.value = cur;
      out.nodes = n;
      out.converged = false;
      return out;
    }
  }
}

}  // namespace gvlab
