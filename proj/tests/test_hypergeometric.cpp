#include <gtest/gtest.h>

#include <cmath>

#include "fwm/error.hpp"
#include "fwm/hypergeometric.hpp"
#include "support.hpp"

namespace fwm {
namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

TEST(Hypergeometric, LogarithmIdentity) {
  // 2F1(1,1;2;x) = -ln(1-x)/x
  for (double x : {-50.0, -5.0, -0.95, -0.5, 0.1, 0.5, 0.89, 0.91, 0.95, 0.999}) {
    const double exact = -std::log1p(-x) / x;
    EXPECT_LE(rel(hyp2f1(1, 1, 2, x), exact), 1e-10) << x;
  }
}

TEST(Hypergeometric, BinomialIdentity) {
  // 2F1(a,b;b;x) = (1-x)^-a
  for (double x : {-20.0, -0.7, 0.3, 0.92, 0.99})
    for (double a : {0.7, 1.5, 3.0}) EXPECT_LE(rel(hyp2f1(a, 4.0, 4.0, x), std::pow(1 - x, -a)), 1e-10) << a << " " << x;
}

TEST(Hypergeometric, ArcsinIdentity) {
  // 2F1(1/2,1/2;3/2;x^2) = asin(x)/x
  for (double x : {0.2, 0.8, 0.97, 0.995}) EXPECT_LE(rel(hyp2f1(0.5, 0.5, 1.5, x * x), std::asin(x) / x), 1e-10) << x;
}

TEST(Hypergeometric, OneMinusKeepsAccuracyAtExtremes) {
  for (double s : {1e-12, 1e-6, 0.05, 0.5, 1.0, 3.0, 1e3, 1e8}) {
    const double exact = -std::log(s) / (1.0 - s);
    const double got = hyp2f1_one_minus(1, 1, 2, s);
    if (s == 1.0)
      EXPECT_DOUBLE_EQ(got, 1.0);
    else
      EXPECT_LE(rel(got, exact), 1e-10) << s;
  }
  // Gauss value at argument 1 approached from tiny s
  const double a = 2.0, b = 3.0, c = 7.5;
  const double gauss = std::tgamma(c) * std::tgamma(c - a - b) / (std::tgamma(c - a) * std::tgamma(c - b));
  EXPECT_LE(rel(hyp2f1_one_minus(a, b, c, 1e-13), gauss), 1e-9);
}

TEST(HypergeometricProperty, PfaffAndSeriesAgree) {
  test::Gen gen(50);
  for (int i = 0; i < 200; ++i) {
    const double a = gen.real(0.5, 6), b = gen.real(0.5, 6), c = gen.real(std::max(a, b) + 0.2, 14);
    const double x = gen.real(-0.85, 0.85);
    const double s = hyp2f1_series(a, b, c, x);
    EXPECT_LE(rel(hyp2f1(a, b, c, x), s), 1e-13);
    EXPECT_LE(rel(hyp2f1_one_minus(a, b, c, 1 - x), s), 1e-12);
    // Pfaff: 2F1(a,b;c;x) = (1-x)^-b 2F1(c-a,b;c;x/(x-1))
    if (x < 0.45) {
      EXPECT_LE(rel(std::pow(1 - x, -b) * hyp2f1_series(c - a, b, c, x / (x - 1)), s), 1e-12);
    }
  }
}

TEST(HypergeometricProperty, EulerRouteAgreesWithSeriesNearOne) {
  test::Gen gen(51);
  for (int i = 0; i < 30; ++i) {
    const double a = gen.real(0.5, 4), b = gen.real(0.5, 4), c = gen.real(std::max(a, b) + 0.5, 10);
    const double x = gen.real(0.9, 0.97);
    // series converges here, slowly
    EXPECT_LE(rel(hyp2f1(a, b, c, x), hyp2f1_series(a, b, c, x)), 1e-9);
  }
}

TEST(Hypergeometric, TerminatingSum) {
  // Chu-Vandermonde at x = 1: (c-b)_n / (c)_n
  for (int n = 0; n <= 8; ++n) {
    const double b = -3.5, c = 2.25;
    double num = 1, den = 1;
    for (int k = 0; k < n; ++k) num *= c - b + k, den *= c + k;
    EXPECT_NEAR(std::abs(hyp2f1_terminating(n, b, c, 1.0) - num / den), 0.0, 1e-12 * std::max(1.0, num / den));
  }
  const std::complex<double> x(0.3, -1.7);
  // 2F1(-2,b;c;x) = 1 - 2 b x / c + b (b+1) x^2 / (c (c+1))
  const double b = 1.5, c = 0.5;
  EXPECT_LE(std::abs(hyp2f1_terminating(2, b, c, x) - (1.0 - 2 * b * x / c + b * (b + 1) * x * x / (c * (c + 1)))), 1e-13);
}

TEST(Hypergeometric, EulerRangeIsEnforced) {
  try {
    hyp2f1(3.0, 2.0, 2.0, 0.95);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OutOfInterval);
  }
}

TEST(Hypergeometric, SeriesRejectsOutsideDisc) {
  try {
    hyp2f1_series(1, 1, 2, 1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoConvergence);
  }
}

}  // namespace
}  // namespace fwm
