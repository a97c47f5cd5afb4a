#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "fwm/classical.hpp"
#include "fwm/sector.hpp"

namespace fwm::test {

// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double real(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }
  double angle() { return real(0.0, 2.0 * std::numbers::pi); }

  SectorLabel label(int max_total) {
    for (;;) {
      const int c1 = integer(0, max_total);
      const int c2 = integer(0, max_total - c1);
      const int c3 = integer(-c2, c1);
      const SectorLabel c{c1, c2, c3};
      if (validate_label(c)) return c;
    }
  }

  FourWaveParams resonant(double hbar = 1.0) {
    FourWaveParams p;
    p.omega[0] = real(0.5, 2.0);
    p.omega[2] = real(0.5, 2.0);
    p.omega[1] = real(0.2, p.omega[0] + p.omega[2] - 0.2);
    p.omega[3] = p.omega[0] - p.omega[1] + p.omega[2];
    p.g = real(0.2, 1.5);
    p.hbar = hbar;
    return p;
  }

  FourWaveParams generic(double hbar = 1.0) {
    FourWaveParams p;
    for (double& w : p.omega) w = real(0.3, 2.0);
    p.g = real(-1.0, 1.5);
    p.hbar = hbar;
    return p;
  }

  // Interior state: every amplitude bounded away from zero.
  ModeState state(double lo = 0.3, double hi = 1.4) {
    ModeState z;
    for (auto& v : z.z) v = std::polar(real(lo, hi), angle());
    return z;
  }

  std::complex<double> complex(double rmax) { return std::polar(real(0.0, rmax), angle()); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fwm::test
