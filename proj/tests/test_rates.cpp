#include <gtest/gtest.h>

#include <cmath>

#include "gvlab/complex_ops.hpp"
#include "gvlab/rates.hpp"

using namespace gvlab;

TEST(FitRate, SyntheticPowerLaws) {
  std::vector<double> ns = {4, 8, 16, 32, 64, 128}, a, b;
  for (double n : ns) {
    a.push_back(5.0 / n);
    b.push_back(3.0 / (n * n));
  }
  const auto fa = fit_rate(ns, a);
  EXPECT_NEAR(fa.exponent, -1.0, 1e-12);
  EXPECT_NEAR(std::exp(fa.log_constant), 5.0, 1e-10);
  EXPECT_NEAR(fa.residual, 0.0, 1e-12);
  EXPECT_NEAR(fit_rate(ns, b).exponent, -2.0, 1e-12);
}

TEST(FitRate, DropsSmallestAndRecordsRange) {
  std::vector<double> ns = {64, 4, 16, 8, 32}, v;
  for (double n : ns) v.push_back(n < 10 ? 1.0 : 7.0 / std::pow(n, 1.5));
  const auto f = fit_rate(ns, v, 2);
  EXPECT_NEAR(f.exponent, -1.5, 1e-12);
  EXPECT_EQ(f.n_min, 16.0);
  EXPECT_EQ(f.n_max, 64.0);
  EXPECT_EQ(f.points_used, 3);
}

TEST(FitRate, ZerosAreExcludedAndDisclosed) {
  const auto z = fit_rate({4, 8, 16, 32}, {0, 0, 0, 0});
  EXPECT_TRUE(z.identically_zero);
  const auto p = fit_rate({4, 8, 16, 32}, {0.25, 0.0, 1.0 / 16, 1.0 / 32});
  EXPECT_FALSE(p.identically_zero);
  EXPECT_EQ(p.zeros_excluded, 1);
  EXPECT_NEAR(p.exponent, -1.0, 1e-12);
}

TEST(FitRate, RejectsBadInput) {
  EXPECT_THROW(fit_rate({4, 8}, {1.0}), invalid_input);
  EXPECT_THROW(fit_rate({4, 8}, {1.0, -1.0}), invalid_input);
  EXPECT_THROW(fit_rate({4, 8, 16}, {1.0, 0.0, 0.0}), invalid_input);
  EXPECT_THROW(fit_rate({4, 4}, {1.0, 2.0}), invalid_input);
}

TEST(FitRate, ComplexClosedFormNorms) {
  const auto e1 = PowerSeries::polynomial({0.0, 1.0});
  std::vector<double> ns, v;
  for (int n : {8, 16, 32, 64, 128, 256}) {
    ns.push_back(n);
    v.push_back(gruss_norm(ComplexFamily::bernstein, e1, e1, n, 1.5));
  }
  EXPECT_NEAR(fit_rate(ns, v).exponent, -1.0, 1e-9);
}

TEST(BoundedSweep, SplitsAtMidpointOfRange) {
  const std::vector<double> ns = {4, 8, 16, 32, 64, 128};
  const auto b = bounded_sweep(ns, {1.0, 2.0, 3.0, 3.1, 3.0, 3.1});
  EXPECT_EQ(b.split_n, 66.0);
  EXPECT_EQ(b.lower_max, 3.1);
  EXPECT_EQ(b.upper_max, 3.1);
  EXPECT_TRUE(b.bounded);
  EXPECT_FALSE(bounded_sweep(ns, {1, 1, 1, 1, 1, 1.2}).bounded);
  EXPECT_TRUE(bounded_sweep(ns, {1, 1, 1, 1, 1, 1.05}).bounded);
  EXPECT_FALSE(bounded_sweep(ns, {1, 1, 1, 1, 1, 1.2}, 1.1).bounded);
  EXPECT_THROW(bounded_sweep({4}, {1.0}), invalid_input);
  EXPECT_THROW(bounded_sweep({4, 4}, {1.0, 1.0}), invalid_input);
}
