#pragma once

#include <complex>

namespace fwm {

// Gauss 2F1(a, b; c; x) for real x < 1. Series for |x| < 0.9, Pfaff transformation for x < 0,
// Euler integral otherwise. Needs c > 0 and, on the integral route, c > b > 0 or c > a > 0.
double hyp2f1(double a, double b, double c, double x);

// 2F1(a, b; c; 1 - s) for s > 0, keeping full accuracy when s is tiny or huge.
double hyp2f1_one_minus(double a, double b, double c, double s);

// Plain power series; throws NoConvergence when |x| >= 1 or the terms do not settle.
double hyp2f1_series(double a, double b, double c, double x);

// 2F1(-n, b; c; x) as a finite sum, complex argument.
std::complex<double> hyp2f1_terminating(int n, double b, double c, std::complex<double> x);

}  // namespace fwm
