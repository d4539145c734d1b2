#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gvlab/complex_ops.hpp"
#include "gvlab/exact.hpp"
#include "gvlab/faber.hpp"
#include "gvlab/rates.hpp"

using namespace gvlab;

namespace {

PowerSeries series(const std::string& name) { return *catalog_lookup(name).as_series; }
PowerSeries mono(int k) {
  std::vector<cplx> c(k + 1, 0.0);
  c[k] = 1.0;
  return PowerSeries::polynomial(c);
}

const std::vector<std::string> kMaps = {"disk", "hypocycloid:2", "hypocycloid:3", "star:2", "star:3",
                                        "lemniscate:1", "lemniscate:2", "semidisk"};

std::vector<cplx> boundary_points(const ConformalMap& map, int count) {
  std::vector<cplx> z(count);
  for (int j = 0; j < count; ++j) z[j] = map.eval(std::polar(1.0, 2.0 * M_PI * (j + 0.5) / count));
  return z;
}

}  // namespace

TEST(ConformalMap, Examples) {
  EXPECT_EQ(psi_eval(ConformalMap::disk(), {1.5, -0.5}), cplx(1.5, -0.5));
  EXPECT_NEAR(std::abs(psi_eval(ConformalMap::hypocycloid(2), 2.0) - 2.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(psi_eval(ConformalMap::star(2), 2.0) - 2.5), 0.0, 1e-15);
  EXPECT_THROW(psi_eval(ConformalMap::star(2), 0.9), invalid_input);
  EXPECT_THROW(psi_eval(ConformalMap::disk(), cplx(0.0, 1.0)), invalid_input);
}

TEST(ConformalMap, ParseAndName) {
  for (const auto& s : kMaps) EXPECT_EQ(ConformalMap::parse(s).name(), s);
  EXPECT_THROW(ConformalMap::parse("square"), invalid_input);
  EXPECT_THROW(ConformalMap::parse("hypocycloid:1"), invalid_input);
  EXPECT_THROW(ConformalMap::parse("star:x"), invalid_input);
  EXPECT_THROW(ConformalMap::parse("star:2x"), invalid_input);
}

TEST(ConformalMap, SemidiskImageIsRightHalfDisk) {
  const auto map = ConformalMap::semidisk();
  EXPECT_NEAR(map.capacity(), 4.0 / (3.0 * std::sqrt(3.0)), 1e-15);
  for (int j = 0; j < 720; ++j) {
    const cplx z = map.eval(std::polar(1.0, 2.0 * M_PI * (j + 0.5) / 720));
    const bool on_arc = std::abs(std::abs(z) - 1.0) < 1e-9 && z.real() >= -1e-9;
    const bool on_segment = std::abs(z.real()) < 1e-9 && std::abs(z.imag()) <= 1.0 + 1e-9;
    EXPECT_TRUE(on_arc || on_segment) << z;
  }
}

TEST(ConformalMap, AsymptoticsAndDerivative) {
  for (const auto& s : kMaps) {
    const auto map = ConformalMap::parse(s);
    for (double R : {1e3, 1e4}) EXPECT_NEAR(std::abs(map.eval(R * cplx(0.6, 0.8)) / (R * cplx(0.6, 0.8)) - map.capacity()), 0.0, 2.0 / R) << s;
    const double h = 1e-5;
    for (cplx w : {cplx(1.3, 0.4), cplx(-2.0, 0.1), cplx(0.2, -1.5)}) {
      const cplx fd = (map.eval(w + h) - map.eval(w - h)) / (2 * h);
      EXPECT_NEAR(std::abs(fd - map.derivative(w)), 0.0, 1e-8) << s;
    }
  }
}

TEST(ConformalMap, ContinuousAlongRays) {
  for (const auto& s : kMaps) {
    const auto map = ConformalMap::parse(s);
    for (int j = 0; j < 32; ++j) {
      const cplx dir = std::polar(1.0, 2.0 * M_PI * (j + 0.25) / 32);
      cplx prev = map.eval(1.001 * dir);
      for (int i = 1; i <= 400; ++i) {
        const double t = 1.001 + i * 0.01;
        const cplx cur = map.eval(t * dir);
        const double step = std::abs(map.derivative(t * dir)) * 0.01;
        EXPECT_LE(std::abs(cur - prev), 3.0 * step + 1e-3) << s << " ray " << j << " t " << t;
        prev = cur;
      }
    }
  }
}

TEST(Laurent, Examples) {
  const auto d = laurent_coeffs(ConformalMap::disk(), 6);
  for (const auto& b : d) EXPECT_EQ(b, cplx(0.0));
  const auto h = laurent_coeffs(ConformalMap::hypocycloid(3), 8);
  for (int k = 0; k <= 8; ++k) EXPECT_NEAR(std::abs(h[k] - (k == 2 ? 0.5 : 0.0)), 0.0, 1e-15) << k;
  const auto s = laurent_coeffs(ConformalMap::star(2), 8);
  for (int k = 0; k <= 8; ++k) EXPECT_NEAR(std::abs(s[k] - (k == 1 ? 1.0 : 0.0)), 0.0, 1e-13) << k;
}

TEST(Laurent, ReproducesMapOnRadiusTwo) {
  for (const auto& s : kMaps) {
    const auto map = ConformalMap::parse(s);
    const auto b = laurent_coeffs(map, 80);
    for (int j = 0; j < 64; ++j) {
      const cplx w = std::polar(2.0, 2.0 * M_PI * j / 64);
      cplx v = map.capacity() * w;
      for (int k = 0; k <= 80; ++k) v += b[k] * std::pow(w, -k);
      EXPECT_NEAR(std::abs(v - map.eval(w)), 0.0, 1e-10) << s;
    }
  }
}

TEST(FaberBasis, DiskIsMonomialAndChebyshevForTheSegment) {
  const FaberBasis disk(ConformalMap::disk(), 10);
  for (int p = 0; p <= 10; ++p)
    for (int j = 0; j <= p; ++j) EXPECT_EQ(disk.polys()[p][j], cplx(j == p ? 1.0 : 0.0));
  // Psi = w + 1/w maps onto [-2, 2]; F_p(z) = 2 T_p(z/2).
  const FaberBasis seg(ConformalMap::hypocycloid(2), 12);
  const auto& F2 = seg.polys()[2];
  EXPECT_NEAR(std::abs(F2[0] + 2.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(F2[1]), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(F2[2] - 1.0), 0.0, 1e-14);
  for (double x : {-1.7, 0.3, 1.9})
    for (int p = 1; p <= 12; ++p)
      EXPECT_NEAR(std::abs(horner(seg.polys()[p], x) - 2.0 * std::cos(p * std::acos(x / 2))), 0.0, 1e-11) << p;
}

TEST(FaberBasis, MonicExactDegreeAndOracleAgreement) {
  for (const auto& s : kMaps) {
    const auto map = ConformalMap::parse(s);
    const FaberBasis basis(map, 24);
    EXPECT_EQ(basis.polys()[0].size(), 1u);
    EXPECT_EQ(basis.polys()[0][0], cplx(1.0));
    for (int p = 0; p <= 24; ++p) {
      ASSERT_EQ(static_cast<int>(basis.polys()[p].size()), p + 1);
      EXPECT_NEAR(std::abs(basis.polys()[p][p] - std::pow(map.capacity(), -p)), 0.0, 1e-12 * std::pow(map.capacity(), -p)) << s;
    }
    EXPECT_LE(basis.oracle_error(), 1e-8);
    const cplx z = map.eval(std::polar(1.5, 0.7));
    const auto rec = basis.values(z, 20);
    const auto orc = FaberBasis::oracle_values(map, z, 20);
    for (int p = 0; p <= 20; ++p) EXPECT_LE(std::abs(rec[p] - orc[p]), 1e-8 * std::max(1.0, std::abs(orc[p]))) << s << p;
  }
}

TEST(FaberBasis, JsonLayout) {
  const auto j = FaberBasis(ConformalMap::hypocycloid(3), 4).to_json();
  EXPECT_EQ(j["domain"], "hypocycloid:3");
  EXPECT_EQ(j["order"], 4);
  ASSERT_EQ(j["polynomials"].size(), 5u);
  EXPECT_EQ(j["polynomials"][3].size(), 4u);
  EXPECT_EQ(j["polynomials"][3][0].size(), 2u);
  EXPECT_THROW(FaberBasis(ConformalMap::disk(), 3).values(0.1, 4), invalid_input);
}

TEST(FaberCoefficients, Examples) {
  for (int m : {0, 1, 4}) {
    const auto c = faber_coefficients(mono(m), ConformalMap::disk());
    for (int k = 0; k < static_cast<int>(c.a.size()); ++k) EXPECT_NEAR(std::abs(c.a[k] - (k == m ? 1.0 : 0.0)), 0.0, 1e-14);
    EXPECT_GE(static_cast<int>(c.a.size()), m + 1);
  }
  const auto k = faber_coefficients(PowerSeries::polynomial({2.5}), ConformalMap::star(3));
  EXPECT_NEAR(std::abs(k.a[0] - 2.5), 0.0, 1e-13);
  for (std::size_t i = 1; i < k.a.size(); ++i) EXPECT_NEAR(std::abs(k.a[i]), 0.0, 1e-13);
  const auto h = faber_coefficients(mono(1), ConformalMap::hypocycloid(3));
  for (std::size_t i = 0; i < h.a.size(); ++i) EXPECT_NEAR(std::abs(h.a[i] - (i == 1 ? 1.0 : 0.0)), 0.0, 1e-14);
}

TEST(FaberCoefficients, DiskCoefficientsAreTaylorCoefficients) {
  const auto f = series("exp");
  const auto c = faber_coefficients(f, ConformalMap::disk());
  EXPECT_TRUE(c.converged);
  for (std::size_t k = 0; k < c.a.size() && k <= 15; ++k) EXPECT_NEAR(std::abs(c.a[k] - f.coeff(static_cast<int>(k))), 0.0, 1e-13);
}

TEST(FaberCoefficients, FaberExpansionReproducesFunction) {
  for (const std::string m : {"hypocycloid:3", "star:2", "lemniscate:2", "semidisk"}) {
    const auto map = ConformalMap::parse(m);
    const auto f = series("sin");
    const auto c = faber_coefficients(f, map);
    EXPECT_TRUE(c.converged) << m;
    const FaberBasis basis(map, static_cast<int>(c.a.size()) - 1);
    for (cplx z : level_curve_points(map, 1.1, 16)) {
      const auto F = basis.values(z, basis.order());
      EXPECT_NEAR(std::abs(faber_sum(c.a, F) - ps_eval(f, z)), 0.0, 1e-9) << m;
    }
  }
}

TEST(CauchyTransform, Examples) {
  const auto f = series("cos");
  const auto cd = faber_coefficients(f, ConformalMap::disk());
  for (cplx w : {cplx(0.3, 0.1), cplx(0.0, -0.9), cplx(1.0, 0.0)}) EXPECT_NEAR(std::abs(cauchy_F(cd, w) - ps_eval(f, w)), 0.0, 1e-13);
  const auto cc = faber_coefficients(PowerSeries::polynomial({-1.5}), ConformalMap::hypocycloid(2));
  EXPECT_NEAR(std::abs(cauchy_F(cc, {0.2, 0.7}) + 1.5), 0.0, 1e-14);
  EXPECT_THROW(cauchy_F(cc, 1.1), invalid_input);
  const auto map = ConformalMap::hypocycloid(2);
  for (const std::string name : {"exp", "sin", "geom:4", "e3"}) {
    const auto g = series(name);
    const auto c = faber_coefficients(g, map);
    EXPECT_NEAR(std::abs(cauchy_F(c, 0.5) - cauchy_F_quadrature(g, map, 0.5)), 0.0, 1e-9) << name;
  }
}

TEST(BernsteinFaber, DiskReducesToComplexBernstein) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const auto map = ConformalMap::disk();
  for (const std::string name : {"exp", "sin", "geom:4"}) {
    const auto f = series(name);
    const auto c = faber_coefficients(f, map);
    const FaberBasis basis(map, 32);
    for (int i = 0; i < 100; ++i) {
      const int n = 1 + static_cast<int>(U(rng) * 32);
      const cplx z = std::polar(std::sqrt(U(rng)), 2.0 * M_PI * U(rng));
      EXPECT_NEAR(std::abs(bernstein_faber_eval(c, basis, n, z) - cbernstein_eval(f, n, z)), 0.0, 1e-10) << name << " " << n;
    }
  }
}

TEST(BernsteinFaber, ConstantAndDegreeOne) {
  const auto map = ConformalMap::star(3);
  EXPECT_NEAR(std::abs(bernstein_faber_eval(PowerSeries::polynomial({4.0}), map, 9, {0.2, 0.3}) - 4.0), 0.0, 1e-12);
  const auto f = series("exp");
  const auto c = faber_coefficients(f, map);
  const FaberBasis basis(map, 1);
  const cplx z(0.4, -0.2);
  const cplx F0 = cauchy_F(c, 0.0), F1 = cauchy_F(c, 1.0);
  EXPECT_NEAR(std::abs(bernstein_faber_eval(c, basis, 1, z) - (F0 + (F1 - F0) * basis.values(z, 1)[1])), 0.0, 1e-12);
}

TEST(BernsteinFaber, WeightsAreForwardDifferenceCoefficients) {
  const int n = 7;
  for (int k = 0; k <= 9; ++k) {
    FaberCoefficients c;
    c.a.assign(k + 1, 0.0);
    c.a[k] = 1.0;
    const auto d = bernstein_faber_weights(c, n);
    for (int p = 0; p <= n; ++p) {
      const double s = static_cast<double>(forward_difference_coefficient(n, p, k));
      const double got = p < static_cast<int>(d.size()) ? d[p].real() : 0.0;
      EXPECT_NEAR(got, s, 1e-14 * (1 + std::abs(s))) << k << " " << p;
    }
  }
}

TEST(BernsteinFaber, ConvergesLikeOneOverN) {
  for (auto [m, name] : {std::pair{"hypocycloid:3", "exp"}, {"semidisk", "sin"}, {"star:2", "cos"}}) {
    const auto map = ConformalMap::parse(m);
    const auto f = series(name);
    const auto c = faber_coefficients(f, map);
    const auto zs = boundary_points(map, 128);
    std::vector<double> ns, err;
    for (int n : {8, 16, 32, 64, 128}) {
      const FaberBasis basis(map, std::min(n, static_cast<int>(c.a.size()) - 1));
      double e = 0.0;
      for (const auto& z : zs) e = std::max(e, std::abs(bernstein_faber_eval(c, basis, n, z) - ps_eval(f, z)));
      ns.push_back(n);
      err.push_back(e);
    }
    EXPECT_LE(fit_rate(ns, err).exponent, -0.9) << m;
  }
}

TEST(FaberGruss, ConstantFactorGivesZero) {
  const FaberGruss fg(PowerSeries::polynomial({3.0}), series("exp"), ConformalMap::hypocycloid(3));
  const auto zs = level_curve_points(ConformalMap::hypocycloid(3), 1.2, 64);
  EXPECT_LE(gruss_faber(fg, 10, zs), 1e-12);
  EXPECT_LE(gv_residual_faber(fg, 10, zs), 1e-12);
}

TEST(FaberGruss, DiskMatchesComplexModule) {
  const auto map = ConformalMap::disk();
  const auto zs = level_curve_points(map, 1.2, 256);
  for (auto [a, b] : {std::pair{"e1", "e2"}, {"exp", "sin"}}) {
    const auto f = series(a), g = series(b);
    const FaberGruss fg(f, g, map);
    for (int n : {3, 16}) {
      const ComplexGruss cg(ComplexFamily::bernstein, f, g, n);
      const auto t = fg.gruss(n, zs);
      const auto corr = fg.correction(n, zs);
      for (std::size_t i = 0; i < zs.size(); ++i) {
        EXPECT_NEAR(std::abs(t[i] - cg.gruss(zs[i])), 0.0, 1e-10);
        EXPECT_NEAR(std::abs(corr[i] - cg.correction(zs[i])), 0.0, 1e-9);
      }
    }
  }
}

TEST(FaberGruss, RatesOnTheSegment) {
  const auto map = ConformalMap::hypocycloid(2);
  const auto zs = level_curve_points(map, 1.2, 256);
  const FaberGruss lin(mono(1), mono(1), map);
  const FaberGruss sq(mono(2), mono(2), map);
  std::vector<double> ns, g1, r2;
  for (int n : {4, 8, 16, 32, 64, 128}) {
    ns.push_back(n);
    g1.push_back(gruss_faber(lin, n, zs));
    r2.push_back(gv_residual_faber(sq, n, zs));
  }
  EXPECT_NEAR(fit_rate(ns, g1).exponent, -1.0, 0.05);
  EXPECT_LE(fit_rate(ns, r2).exponent, -1.8);
}
