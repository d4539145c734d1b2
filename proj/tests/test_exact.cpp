#include <gtest/gtest.h>

#include "gvlab/exact.hpp"

using namespace gvlab;

namespace {

// B_n(e_k)(x) by the defining sum, with exact rationals.
rational bernstein_direct(int n, int k, const rational& x) {
  rational s = 0;
  for (int j = 0; j <= n; ++j) {
    rational node = rational(j, n);
    rational nk = 1, xp = 1, yp = 1;
    for (int i = 0; i < k; ++i) nk *= node;
    for (int i = 0; i < j; ++i) xp *= x;
    for (int i = 0; i < n - j; ++i) yp *= (1 - x);
    s += rational(binomial(n, j)) * xp * yp * nk;
  }
  return s;
}

ExactPolynomial poly(std::initializer_list<rational> c) {
  ExactPolynomial p;
  int k = 0;
  for (const auto& v : c) p = p + ExactPolynomial::monomial(k++, v);
  return p;
}

}  // namespace

TEST(BernsteinImage, LinearIsPreserved) {
  for (int n = 1; n <= 12; ++n) {
    const auto p = bernstein_monomial_image(n, 1);
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(p(rational(3, 7)), rational(3, 7));
  }
}

TEST(BernsteinImage, CubicClosedForm) {
  for (int n : {1, 2, 3, 7, 20}) {
    const auto p = bernstein_monomial_image(n, 3);
    for (int i = 0; i <= 10; ++i) {
      const rational x(i, 10);
      const rational X = x * (1 - x);
      const rational expect = x * x * x + 3 * x * X / n + X * (1 - 2 * x) / (n * n);
      EXPECT_EQ(p(x), expect) << n << " " << x;
    }
  }
}

TEST(BernsteinImage, DegreeOneOperatorSendsEveryMonomialToX) {
  for (int k = 1; k <= 5; ++k) {
    const auto p = bernstein_monomial_image(1, k);
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(p(rational(2, 9)), rational(2, 9));
  }
}

TEST(BernsteinImage, MatchesDefiningSum) {
  for (int n : {1, 4, 9}) {
    for (int k = 0; k <= 12; ++k) {
      const auto p = bernstein_monomial_image(n, k);
      EXPECT_LE(p.degree(), std::min(n, k));
      for (const rational& x : {rational(0), rational(1, 3), rational(5, 8), rational(1)})
        EXPECT_EQ(p(x), bernstein_direct(n, k, x)) << n << " " << k;
    }
  }
}

TEST(ForwardDifference, StirlingRelation) {
  // Coefficient of x^p in B_n(e_k) is C(n,p) Delta^p e_k(0), step 1/n.
  for (int n : {3, 6}) {
    for (int k = 0; k <= 7; ++k) {
      const auto img = bernstein_monomial_image(n, k);
      for (int p = 0; p <= n; ++p) {
        const rational c = forward_difference_coefficient(n, p, k);
        const rational got = p <= img.degree() ? img.coeffs()[p] : rational(0);
        EXPECT_EQ(got, c) << n << " " << p << " " << k;
      }
    }
  }
}

TEST(PaltaneaMoment, Examples) {
  EXPECT_EQ(paltanea_monomial_moment(5, rational(2), 3, 0), rational(1));
  EXPECT_EQ(paltanea_monomial_moment(5, rational(2), 3, 1), rational(3, 5));
  EXPECT_EQ(paltanea_monomial_moment(3, rational(1), 1, 2), rational(1, 6));
  EXPECT_DOUBLE_EQ(paltanea_monomial_moment(3, 1.0, 1, 2), 1.0 / 6.0);
  // k = 0 and k = n are the endpoint functionals f(0), f(1).
  EXPECT_EQ(paltanea_monomial_moment(3, rational(1), 3, 4), rational(1));
  EXPECT_EQ(paltanea_monomial_moment(3, rational(1), 0, 2), rational(0));
  EXPECT_THROW(paltanea_monomial_moment(3, rational(1), 4, 1), invalid_input);
  EXPECT_THROW(paltanea_monomial_moment(3, rational(0), 1, 1), invalid_input);
}

TEST(PaltaneaImage, SecondMomentIdentity) {
  for (const rational& rho : {rational(1, 2), rational(1), rational(2), rational(5)}) {
    for (int n : {1, 2, 5, 11}) {
      for (int i = 0; i <= 8; ++i) {
        const rational x(i, 8);
        const auto c = poly({x * x, -2 * x, rational(1)});  // (t - x)^2
        const rational got = paltanea_image(n, rho, c)(x);
        EXPECT_EQ(got, (rho + 1) * x * (1 - x) / (n * rho + 1)) << n << " " << rho;
      }
    }
  }
}

TEST(PaltaneaImage, PreservesLinearFunctionsAndInterpolatesEndpoints) {
  const rational rho(3, 2);
  const auto lin = poly({rational(2), rational(-5)});
  const auto q = poly({rational(1), rational(0), rational(0), rational(4)});
  for (int n : {1, 3, 8}) {
    const auto img = paltanea_image(n, rho, lin);
    EXPECT_EQ(img(rational(2, 7)), lin(rational(2, 7)));
    const auto iq = paltanea_image(n, rho, q);
    EXPECT_EQ(iq(rational(0)), q(rational(0)));
    EXPECT_EQ(iq(rational(1)), q(rational(1)));
  }
}

TEST(BernsteinImage, OfPolynomialIsLinear) {
  const auto f = poly({rational(1), rational(-2), rational(3)});
  const auto img = bernstein_image(5, f);
  const auto expect = bernstein_monomial_image(5, 0) + bernstein_monomial_image(5, 1) * rational(-2) +
                      bernstein_monomial_image(5, 2) * rational(3);
  EXPECT_EQ(img(rational(1, 3)), expect(rational(1, 3)));
}

TEST(ExactPolynomial, JsonRoundTrip) {
  const auto p = bernstein_monomial_image(7, 4);
  const auto q = ExactPolynomial::from_json(p.to_json());
  EXPECT_EQ(q.degree(), p.degree());
  for (int i = 0; i <= p.degree(); ++i) EXPECT_EQ(q.coeffs()[i], p.coeffs()[i]);
  EXPECT_TRUE(p.to_json()[0].is_array());
}

TEST(ExactPolynomial, DerivativeAndEvaluation) {
  const auto p = poly({rational(1), rational(2), rational(3)});
  EXPECT_EQ(p.derivative()(rational(1, 2)), rational(5));
  EXPECT_DOUBLE_EQ(p.eval(0.5), 2.75);
  const cplx z = p.eval(cplx(0.0, 1.0));
  EXPECT_DOUBLE_EQ(z.real(), -2.0);
  EXPECT_DOUBLE_EQ(z.imag(), 2.0);
}
