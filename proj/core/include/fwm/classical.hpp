#pragma once

#include <array>
#include <complex>
#include <ostream>
#include <vector>

#include "fwm/sector.hpp"

namespace fwm {

using cplx = std::complex<double>;

struct ModeState {
  std::array<cplx, 4> z{};
  // Some amplitude vanishes: the angles are undefined there.
  bool on_boundary() const;
};

struct ActionAngle {
  std::array<double, 4> I{};    // I0..I3
  std::array<double, 4> psi{};  // psi0..psi3
};

struct FrozenActions {
  double b1 = 0.0, b2 = 0.0, b3 = 0.0;
  double lower() const;  // max(0, b3)
  double upper() const;  // min(b1, b2 + b3)
};

struct ReducedCoords {
  double I0 = 0.0;
  double psi0 = 0.0;
  FrozenActions b;
};

enum class Regime { Oscillatory, Exponential, Hyperbolic, Stationary, Fallback };
const char* regime_name(Regime r);

struct QuadraticCoeffs {
  double p = 0.0, q = 0.0, r = 0.0, Delta = 0.0;
  Regime regime = Regime::Fallback;
};

double hamiltonian(const ModeState& z, const FourWaveParams& p);

ActionAngle to_action_angle(const ModeState& z);
ModeState from_action_angle(const ActionAngle& a);

FrozenActions frozen_actions(const ActionAngle& a);
ReducedCoords reduce(const ActionAngle& a);

double g0(double I0, const FrozenActions& b);
double g0_prime(double I0, const FrozenActions& b);
// Partials of G0 with respect to I1, I2, I3 at fixed I0.
std::array<double, 3> g0_action_partials(double I0, const FrozenActions& b);

// omega1 b1 + omega3 b2 + (omega3 - omega2) b3
double frozen_energy(const FrozenActions& b, const FourWaveParams& p);
// I0 (b2 + b3 - I0) + (b1 - I0)(I0 - b3)
double quadratic_part(double I0, const FrozenActions& b);

double reduced_hamiltonian(const ReducedCoords& rc, const FourWaveParams& p);

// Classifies with |Delta| <= 1e-12 (q^2 + 4|pr|) treated as zero.
Regime classify(double p, double q, double r);
QuadraticCoeffs pqr(double E, const FrozenActions& b, const FourWaveParams& p);

// Solution of (dI0/dt)^2 = p I0^2 + q I0 + r with the velocity sign taken from the data at t0.
class QuadraticSolution {
 public:
  QuadraticSolution(const QuadraticCoeffs& c, double I0_at_t0, double I0dot_at_t0, double t0);
  double I0(double t) const;
  double I0_dot(double t) const;
  const QuadraticCoeffs& coeffs() const { return c_; }
  double constant_C() const { return C_; }

 private:
  QuadraticCoeffs c_;
  double t0_;
  double shift_;  // -q/2p
  double amp_;    // signed amplitude of the oscillating or growing part
  double rate_;   // sqrt(-p) or sqrt(p)
  double C_;
};

struct ReducedSample {
  double t = 0.0;
  double I0 = 0.0;
  double I0_dot = 0.0;
  cplx phase{1.0, 0.0};  // e^{i psi0}
  double psi0 = 0.0;     // unwrapped
};

// Resonant closed form for a physical initial condition.
class ClosedForm {
 public:
  ClosedForm(const ReducedCoords& rc0, const FourWaveParams& p, double t0 = 0.0);
  ReducedSample at(double t) const;
  double energy() const { return E_; }
  const QuadraticCoeffs& coeffs() const { return sol_.coeffs(); }
  const QuadraticSolution& solution() const { return sol_; }
  const FrozenActions& actions() const { return b_; }

 private:
  FourWaveParams p_;
  FrozenActions b_;
  double E_;
  QuadraticSolution sol_;
  double psi0_t0_;
};

enum class ReducedMethod { ClosedForm, Linear, Rk4 };
const char* method_name(ReducedMethod m);

struct ReducedTrajectory {
  ReducedMethod method = ReducedMethod::ClosedForm;
  FrozenActions b;
  double energy = 0.0;
  QuadraticCoeffs coeffs;
  std::vector<ReducedSample> samples;
};

std::vector<double> uniform_grid(double t0, double t1, int steps);

// Samples a closed form with psi0 unwrapped along the grid.
ReducedTrajectory sample(const ClosedForm& cf, const std::vector<double>& grid);

// Closed form when available, exact rotation for g = 0, RK4 in (x, y, I0) otherwise.
ReducedTrajectory solve_reduced(const ReducedCoords& rc0, const FourWaveParams& p, const std::vector<double>& grid,
                                double max_step = 1e-3);

// RK4 on the reduced flow in shape coordinates, free of the 1/sqrt(G0) singularity.
ReducedTrajectory rk4_reduced(const ReducedCoords& rc0, const FourWaveParams& p, const std::vector<double>& grid,
                              double max_step = 1e-3);

// Rates d psi_k / dt = dH/dI_k, k = 1..3, at one reduced sample.
std::array<double, 3> outer_phase_rates(const ReducedSample& s, const FrozenActions& b, const FourWaveParams& p);

struct OuterPhases {
  std::vector<double> psi1, psi2, psi3;
};

// Cumulative Simpson quadrature of the rates on a uniform grid.
OuterPhases integrate_outer_phases(const ReducedTrajectory& traj, const std::array<double, 3>& psi_at_t0,
                                   const FourWaveParams& p);

std::vector<ModeState> reconstruct_states(const ReducedTrajectory& traj, const OuterPhases& ph);

struct FullTrajectory {
  std::vector<double> t;
  std::vector<ModeState> z;
  double drift_H = 0.0;
  std::array<double, 3> drift_I{};  // I1, I2, I3
};

std::array<cplx, 4> vector_field(const ModeState& z, const FourWaveParams& p);

// Fixed-step RK4 for the four amplitudes; every `stride`-th step is stored.
FullTrajectory rk4_full(const ModeState& z0, const FourWaveParams& p, double t1, double dt, int stride = 1);

void write_reduced_csv(std::ostream& out, const ReducedTrajectory& traj, const OuterPhases& ph,
                       const FourWaveParams& p);  // t,I0,psi0,psi1,psi2,psi3,E_drift
void write_full_csv(std::ostream& out, const std::vector<double>& t, const std::vector<ModeState>& z);

double wrap_angle(double a);  // into [0, 2 pi)

}  // namespace fwm
