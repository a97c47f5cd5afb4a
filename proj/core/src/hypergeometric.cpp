#include "fwm/hypergeometric.hpp"

#include <cmath>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fwm/error.hpp"

namespace fwm {

namespace {

constexpr double kSeriesRadius = 0.9;
constexpr double kTermCutoff = 1e-15;
constexpr int kMaxTerms = 100000;

double power_term(double base, double expo) { return expo == 0.0 ? 0.0 : expo * std::log(base); }

// Euler integral, needs c > b > 0; omx = 1 - x supplied separately.
// In u = 1 - t the integrand peaks on the scale omx near u = 0, so [0, 1] is cut geometrically there.
double euler_integral(double a, double b, double c, double x, double omx) {
  const double log_pref = std::lgamma(c) - std::lgamma(b) - std::lgamma(c - b);
  auto integrand = [&](double u, double one_minus_u) {
    const double base = omx + x * u;
    return std::exp(log_pref + power_term(one_minus_u, b - 1.0) + power_term(u, c - b - 1.0) - a * std::log(base));
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  double sum = 0.0, lo = 0.0;
  for (double hi = std::min(1.0, omx); lo < 1.0; hi = std::min(1.0, hi * 16.0)) {
    const double top = hi;
    // xc is the signed distance to the nearer endpoint; near u = 1 it gives 1 - u without cancellation
    auto f = [&](double u, double xc) { return integrand(u, top == 1.0 && xc > 0.0 ? xc : 1.0 - u); };
    sum += integrator.integrate(f, lo, hi, 1e-14);
    lo = hi;
  }
  return sum;
}

double euler_any(double a, double b, double c, double x, double omx) {
  if (c > b && b > 0.0) return euler_integral(a, b, c, x, omx);
  if (c > a && a > 0.0) return euler_integral(b, a, c, x, omx);
  throw Error(Errc::OutOfInterval, "2F1 parameters outside the Euler-integral range");
}

}  // namespace

double hyp2f1_series(double a, double b, double c, double x) {
  if (std::abs(x) >= 1.0) throw Error(Errc::NoConvergence, "2F1 series needs |x| < 1");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) < kTermCutoff * std::abs(sum) && k > 2) return sum;
  }
  throw Error(Errc::NoConvergence, "2F1 series did not settle at x=" + std::to_string(x));
}

double hyp2f1_one_minus(double a, double b, double c, double s) {
  if (!(s > 0.0)) throw Error(Errc::OutOfInterval, "2F1 argument must be below 1");
  if (c <= 0.0) throw Error(Errc::OutOfInterval, "2F1 needs c > 0");
  const double x = 1.0 - s;
  if (std::abs(x) < kSeriesRadius) return hyp2f1_series(a, b, c, x);
  if (x > 0.0) return euler_any(a, b, c, x, s);
  // Pfaff: 2F1(a,b;c;x) = (1-x)^(-b) 2F1(c-a, b; c; y), y = x/(x-1) = (s-1)/s, 1 - y = 1/s
  const double y = (s - 1.0) / s;
  const double pref = std::pow(s, -b);
  if (y < kSeriesRadius) return pref * hyp2f1_series(c - a, b, c, y);
  return pref * euler_any(c - a, b, c, y, 1.0 / s);
}

double hyp2f1(double a, double b, double c, double x) {
  if (!(x < 1.0)) throw Error(Errc::OutOfInterval, "2F1 argument must be below 1");
  if (x == 0.0) return 1.0;
  if (std::abs(x) < kSeriesRadius) return hyp2f1_series(a, b, c, x);
  return hyp2f1_one_minus(a, b, c, 1.0 - x);
}

std::complex<double> hyp2f1_terminating(int n, double b, double c, std::complex<double> x) {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "terminating 2F1 needs n >= 0");
  std::complex<double> term = 1.0;
  std::complex<double> sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (-n + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
  }
  return sum;
}

}  // namespace fwm
