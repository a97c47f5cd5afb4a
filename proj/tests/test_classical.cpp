#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "fwm/classical.hpp"
#include "fwm/error.hpp"
#include "support.hpp"

namespace fwm {
namespace {

constexpr double kPi = std::numbers::pi;

const ReducedCoords kWorked{1.0, kPi / 2, {2.0, 2.0, 0.0}};

TEST(Classical, HamiltonianExamples) {
  FourWaveParams p;
  const ModeState ones{{cplx(1), cplx(1), cplx(1), cplx(1)}};
  EXPECT_DOUBLE_EQ(hamiltonian(ones, p), 8.0);
  test::Gen gen(30);
  const ModeState z = gen.state();
  FourWaveParams free = gen.generic();
  free.g = 0.0;
  double s = 0.0;
  for (int k = 0; k < 4; ++k) s += free.omega[k] * std::norm(z.z[k]);
  EXPECT_NEAR(hamiltonian(z, free), s, 1e-14);
  ModeState z0 = z;
  z0.z[0] = 0.0;
  const FourWaveParams q = gen.generic();
  const double expect = q.omega[1] * std::norm(z.z[1]) + q.omega[2] * std::norm(z.z[2]) +
                        q.omega[3] * std::norm(z.z[3]) + q.g * std::norm(z.z[1]) * std::norm(z.z[2]);
  EXPECT_NEAR(hamiltonian(z0, q), expect, 1e-13);
}

TEST(Classical, ActionAngleExamples) {
  const ActionAngle a = to_action_angle({{cplx(1), cplx(1), cplx(1), cplx(1)}});
  EXPECT_EQ(a.I, (std::array<double, 4>{1.0, 2.0, 2.0, 0.0}));
  for (double v : a.psi) EXPECT_EQ(v, 0.0);
  ModeState b{{cplx(1), cplx(0), cplx(1), cplx(1)}};
  EXPECT_TRUE(b.on_boundary());
  try {
    to_action_angle(b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OnBoundary);
  }
  const ActionAngle w = to_action_angle({{cplx(0, 1), cplx(1), cplx(1), cplx(1)}});
  EXPECT_NEAR(w.psi[0], kPi / 2, 1e-15);
}

TEST(ClassicalProperty, ActionAngleRoundTrip) {
  test::Gen gen(31);
  for (int i = 0; i < 500; ++i) {
    const ModeState z = gen.state(0.05, 3.0);
    const ActionAngle a = to_action_angle(z);
    const ModeState back = from_action_angle(a);
    for (int k = 0; k < 4; ++k) EXPECT_LE(std::abs(back.z[k] - z.z[k]), 1e-14 * std::max(1.0, std::abs(z.z[k])));
    const FrozenActions b = frozen_actions(a);
    EXPECT_GT(a.I[0], b.lower());
    EXPECT_LT(a.I[0], b.upper());
    for (double v : a.psi) {
      EXPECT_GE(v, 0.0);
      EXPECT_LT(v, 2 * kPi);
    }
  }
}

TEST(Classical, G0Examples) {
  const FrozenActions b{2.0, 2.0, 0.0};
  EXPECT_EQ(g0(1.0, b), 1.0);
  EXPECT_EQ(g0(0.0, b), 0.0);
  EXPECT_EQ(g0(2.0, b), 0.0);
  const FrozenActions c{3.0, 1.5, 0.7};
  EXPECT_EQ(g0(c.b3, c), 0.0);
  EXPECT_EQ(g0(c.b1, c), 0.0);
  const double h = 1e-6, x = 1.3;
  EXPECT_NEAR(g0_prime(x, c), (g0(x + h, c) - g0(x - h, c)) / (2 * h), 1e-8);
}

TEST(Classical, ReducedHamiltonianExamples) {
  FourWaveParams p;
  EXPECT_NEAR(reduced_hamiltonian(kWorked, p), 6.0, 1e-14);
  EXPECT_THROW(reduced_hamiltonian({2.5, 0.0, {2.0, 2.0, 0.0}}, p), Error);
  test::Gen gen(32);
  FourWaveParams free = gen.generic();
  free.g = 0.0;
  const FrozenActions b{2.0, 1.5, 0.5};
  const double h1 = reduced_hamiltonian({1.0, 0.3, b}, free), h2 = reduced_hamiltonian({1.2, 2.0, b}, free);
  const double h3 = reduced_hamiltonian({1.4, 5.0, b}, free);
  EXPECT_NEAR(h3 - h2, h2 - h1, 1e-13);
  EXPECT_NEAR((h2 - h1) / 0.2, free.detuning(), 1e-12);
}

TEST(ClassicalProperty, ReducedHamiltonianMatchesFull) {
  test::Gen gen(33);
  for (int i = 0; i < 200; ++i) {
    const FourWaveParams p = gen.generic();
    const ModeState z = gen.state();
    const ReducedCoords rc = reduce(to_action_angle(z));
    EXPECT_NEAR(reduced_hamiltonian(rc, p), hamiltonian(z, p), 1e-12 * std::max(1.0, hamiltonian(z, p)));
  }
}

TEST(Classical, PqrExamples) {
  FourWaveParams p;
  const QuadraticCoeffs c = pqr(6.0, {2.0, 2.0, 0.0}, p);
  EXPECT_NEAR(c.p, -8.0, 1e-14);
  EXPECT_NEAR(c.q, 16.0, 1e-14);
  EXPECT_NEAR(c.r, -4.0, 1e-14);
  EXPECT_NEAR(c.Delta, 128.0, 1e-12);
  EXPECT_EQ(c.regime, Regime::Oscillatory);
  const FrozenActions b{2.0, 1.0, 0.0};
  EXPECT_NEAR(pqr(frozen_energy(b, p), b, p).r, 0.0, 1e-14);
  FourWaveParams off;
  off.omega = {1.0, 2.0, 1.0, 1.0};
  EXPECT_THROW(pqr(6.0, b, off), Error);
  FourWaveParams zero;
  zero.g = 0.0;
  EXPECT_THROW(pqr(6.0, b, zero), Error);
}

TEST(ClassicalProperty, PqrPolynomialIdentity) {
  test::Gen gen(34);
  for (int i = 0; i < 100; ++i) {
    const FourWaveParams p = gen.resonant();
    const ReducedCoords rc = reduce(to_action_angle(gen.state()));
    const double E = reduced_hamiltonian(rc, p);
    const QuadraticCoeffs c = pqr(E, rc.b, p);
    const double I0 = gen.real(rc.b.lower(), rc.b.upper());
    const double K = frozen_energy(rc.b, p);
    const double cosb = E - K - p.g * quadratic_part(I0, rc.b);
    const double rhs = 4 * p.g * p.g * g0(I0, rc.b) - cosb * cosb;
    EXPECT_NEAR(c.p * I0 * I0 + c.q * I0 + c.r, rhs, 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(Classical, RegimeClassification) {
  EXPECT_EQ(classify(-1.0, 3.0, -1.0), Regime::Oscillatory);
  EXPECT_EQ(classify(1.0, 2.0, 1.0), Regime::Exponential);
  EXPECT_EQ(classify(1.0, 1.0, 1.0), Regime::Hyperbolic);
  EXPECT_EQ(classify(1.0, 3.0, 1.0), Regime::Fallback);
  EXPECT_EQ(classify(0.0, 1.0, 1.0), Regime::Fallback);
  EXPECT_STREQ(regime_name(Regime::Oscillatory), "a");
}

TEST(Classical, WorkedClosedForm) {
  FourWaveParams p;
  const ClosedForm cf(kWorked, p);
  EXPECT_NEAR(cf.energy(), 6.0, 1e-14);
  EXPECT_NEAR(cf.solution().constant_C(), 0.0, 1e-14);
  EXPECT_NEAR(cf.at(0.0).I0_dot, 2.0, 1e-13);
  for (int i = 0; i <= 1000; ++i) {
    const double t = 0.01 * i;
    const ReducedSample s = cf.at(t);
    EXPECT_NEAR(s.I0, 1.0 + std::sqrt(0.5) * std::sin(2 * std::sqrt(2.0) * t), 1e-13);
    EXPECT_NEAR(std::abs(s.phase), 1.0, 1e-12);
  }
}

TEST(Classical, StationaryClosedForm) {
  FourWaveParams p;
  const ClosedForm cf({1.0, 0.0, {2.0, 2.0, 0.0}}, p);
  for (double t : {0.0, 1.0, 7.5}) EXPECT_NEAR(cf.at(t).I0, 1.0, 1e-12);
}

TEST(Classical, SyntheticRegimesBAndC) {
  // regime b: p > 0, Delta = 0
  QuadraticCoeffs b{4.0, -8.0, 4.0, 0.0, Regime::Exponential};
  const QuadraticSolution sb(b, 1.5, std::sqrt(4.0) * 0.5, 0.0);
  for (double t : {0.0, 0.3, 1.0}) {
    const double x = sb.I0(t), v = sb.I0_dot(t);
    EXPECT_NEAR(v * v, b.p * std::pow(x + b.q / (2 * b.p), 2), 1e-9 * std::max(1.0, v * v));
  }
  // regime c: p > 0, Delta < 0
  QuadraticCoeffs c{2.0, 1.0, 3.0, 1.0 - 24.0, Regime::Hyperbolic};
  const double x0 = 0.4, v0 = -std::sqrt(c.p * x0 * x0 + c.q * x0 + c.r);
  const QuadraticSolution sc(c, x0, v0, 0.0);
  EXPECT_NEAR(sc.I0(0.0), x0, 1e-12);
  EXPECT_NEAR(sc.I0_dot(0.0), v0, 1e-12);
  for (double t : {0.1, 0.5, 1.2}) {
    const double x = sc.I0(t), v = sc.I0_dot(t);
    EXPECT_NEAR(v * v, c.p * x * x + c.q * x + c.r, 1e-9 * std::max(1.0, v * v));
    const double h = 1e-6;
    EXPECT_NEAR((sc.I0(t + h) - sc.I0(t - h)) / (2 * h), v, 1e-6 * std::max(1.0, std::abs(v)));
  }
  QuadraticCoeffs f{1.0, 3.0, 1.0, 5.0, Regime::Fallback};
  EXPECT_THROW(QuadraticSolution(f, 0.1, 0.1, 0.0), Error);
}

TEST(ClassicalProperty, ClosedFormContract) {
  test::Gen gen(35);
  for (int i = 0; i < 40; ++i) {
    const FourWaveParams p = gen.resonant();
    const ReducedCoords rc = reduce(to_action_angle(gen.state()));
    const ClosedForm cf(rc, p);
    const QuadraticCoeffs& q = cf.coeffs();
    for (int k = 0; k <= 100; ++k) {
      const ReducedSample s = cf.at(0.1 * k);
      EXPECT_NEAR(std::abs(s.phase), 1.0, 1e-9);
      EXPECT_NEAR(reduced_hamiltonian({s.I0, s.psi0, rc.b}, p), cf.energy(), 1e-8 * std::max(1.0, cf.energy()));
      const double res = s.I0_dot * s.I0_dot - (q.p * s.I0 * s.I0 + q.q * s.I0 + q.r);
      EXPECT_LE(std::abs(res), 1e-8 * std::max(1.0, std::abs(q.r) + std::abs(q.q) + std::abs(q.p)));
    }
  }
}

TEST(ClassicalProperty, ClosedFormMatchesReducedRk4) {
  test::Gen gen(36);
  for (int i = 0; i < 10; ++i) {
    const FourWaveParams p = gen.resonant();
    const ReducedCoords rc = reduce(to_action_angle(gen.state()));
    const std::vector<double> grid = uniform_grid(0.0, 5.0, 100);
    const ReducedTrajectory a = sample(ClosedForm(rc, p), grid);
    const ReducedTrajectory b = rk4_reduced(rc, p, grid, 1e-3);
    for (std::size_t k = 0; k < grid.size(); ++k) EXPECT_NEAR(a.samples[k].I0, b.samples[k].I0, 1e-8);
  }
}

TEST(Classical, SolveReducedDispatch) {
  FourWaveParams p;
  const std::vector<double> grid = uniform_grid(0.0, 1.0, 10);
  EXPECT_EQ(solve_reduced(kWorked, p, grid).method, ReducedMethod::ClosedForm);
  FourWaveParams off = p;
  off.omega[1] = 1.2;
  EXPECT_EQ(solve_reduced(kWorked, off, grid).method, ReducedMethod::Rk4);
  FourWaveParams free = p;
  free.g = 0.0;
  EXPECT_EQ(solve_reduced(kWorked, free, grid).method, ReducedMethod::Linear);
  EXPECT_THROW(uniform_grid(1.0, 0.0, 5), Error);
}

TEST(ClassicalProperty, OuterPhaseRatesAreActionPartials) {
  test::Gen gen(37);
  for (int i = 0; i < 50; ++i) {
    const FourWaveParams p = gen.generic();
    const ActionAngle a = to_action_angle(gen.state());
    const FrozenActions b = frozen_actions(a);
    ReducedSample s;
    s.I0 = a.I[0];
    s.psi0 = a.psi[0];
    s.phase = std::polar(1.0, a.psi[0]);
    const auto rates = outer_phase_rates(s, b, p);
    for (int k = 1; k <= 3; ++k) {
      const double h = 1e-6;
      ActionAngle up = a, dn = a;
      up.I[k] += h;
      dn.I[k] -= h;
      const double fd = (hamiltonian(from_action_angle(up), p) - hamiltonian(from_action_angle(dn), p)) / (2 * h);
      EXPECT_NEAR(rates[k - 1], fd, 1e-6 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(Classical, OuterPhasesFreeRotation) {
  FourWaveParams p;
  p.omega = {1.1, 0.7, 1.3, 0.4};
  p.g = 0.0;
  const ReducedTrajectory tr = solve_reduced(kWorked, p, uniform_grid(0.0, 2.0, 20));
  const OuterPhases ph = integrate_outer_phases(tr, {0.1, 0.2, 0.3}, p);
  for (std::size_t i = 0; i < tr.samples.size(); ++i) {
    const double t = tr.samples[i].t;
    EXPECT_NEAR(ph.psi1[i], 0.1 + p.omega[1] * t, 1e-12);
  }
}

std::vector<ModeState> reconstruct(const ModeState& z0, const FourWaveParams& p, double t1, int steps) {
  const ActionAngle aa = to_action_angle(z0);
  const ReducedTrajectory tr = solve_reduced(reduce(aa), p, uniform_grid(0.0, t1, steps));
  const OuterPhases ph = integrate_outer_phases(tr, {aa.psi[1], aa.psi[2], aa.psi[3]}, p);
  return reconstruct_states(tr, ph);
}

TEST(Classical, ReconstructionMatchesFullRk4AndSimpsonOrder) {
  FourWaveParams p;
  const ModeState z0{{cplx(0, 1), cplx(1), cplx(1), cplx(1)}};
  const FullTrajectory ft = rk4_full(z0, p, 10.0, 1e-3, 10);
  const std::vector<ModeState> zs = reconstruct(z0, p, 10.0, 1000);
  ASSERT_EQ(zs.size(), ft.z.size());
  double err = 0.0;
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (int k = 0; k < 4; ++k) err = std::max(err, std::abs(zs[i].z[k] - ft.z[i].z[k]));
  EXPECT_LE(err, 1e-5);

  auto final_error = [&](int steps) {
    const ModeState exact = reconstruct(z0, p, 2.0, 4096).back();
    const ModeState got = reconstruct(z0, p, 2.0, steps).back();
    double e = 0.0;
    for (int k = 0; k < 4; ++k) e = std::max(e, std::abs(got.z[k] - exact.z[k]));
    return e;
  };
  const double e1 = final_error(32), e2 = final_error(64);
  EXPECT_NEAR(std::log2(e1 / e2), 4.0, 0.6);
}

TEST(Classical, Rk4FullExamples) {
  FourWaveParams p;
  p.omega = {1.0, 0.5, 1.5, 2.0};
  p.g = 0.0;
  test::Gen gen(38);
  const ModeState z0 = gen.state();
  const FullTrajectory ft = rk4_full(z0, p, 3.0, 1e-3, 3000);
  for (int k = 0; k < 4; ++k)
    EXPECT_NEAR(std::abs(ft.z.back().z[k] - std::polar(1.0, p.omega[k] * ft.t.back()) * z0.z[k]), 0.0, 1e-10);
  FourWaveParams q;
  const FullTrajectory w = rk4_full(from_action_angle({{1.0, 2.0, 2.0, 0.0}, {kPi / 2, 0.0, 0.0, 0.0}}), q, 10.0, 1e-3);
  EXPECT_LE(w.drift_H, 1e-8);
  for (double d : w.drift_I) EXPECT_LE(d, 1e-8);
  const ClosedForm cf(kWorked, q);
  double m = 0.0;
  for (std::size_t i = 0; i < w.t.size(); i += 50) m = std::max(m, std::abs(std::norm(w.z[i].z[0]) - cf.at(w.t[i]).I0));
  EXPECT_LE(m, 1e-6);
}

TEST(ClassicalProperty, VectorFieldIsHamiltonian) {
  test::Gen gen(39);
  for (int i = 0; i < 20; ++i) {
    const FourWaveParams p = gen.generic();
    const ModeState z = gen.state();
    const auto f = vector_field(z, p);
    for (int k = 0; k < 4; ++k) {
      // dz/dt = i dH/dzbar, dH/dzbar = (dH/dx + i dH/dy)/2
      const double h = 1e-6;
      ModeState a = z, b = z, c = z, d = z;
      a.z[k] += h, b.z[k] -= h, c.z[k] += cplx(0, h), d.z[k] -= cplx(0, h);
      const double dx = (hamiltonian(a, p) - hamiltonian(b, p)) / (2 * h);
      const double dy = (hamiltonian(c, p) - hamiltonian(d, p)) / (2 * h);
      EXPECT_LE(std::abs(f[k] - cplx(0, 1) * 0.5 * cplx(dx, dy)), 1e-7);
    }
  }
}

TEST(Classical, CsvHeadersAndWrap) {
  FourWaveParams p;
  const ReducedTrajectory tr = solve_reduced(kWorked, p, uniform_grid(0.0, 1.0, 4));
  const OuterPhases ph = integrate_outer_phases(tr, {0.0, 0.0, 0.0}, p);
  std::ostringstream out;
  write_reduced_csv(out, tr, ph, p);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "t,I0,psi0,psi1,psi2,psi3,E_drift");
  std::ostringstream full;
  write_full_csv(full, {0.0}, {ModeState{}});
  EXPECT_EQ(full.str().substr(0, full.str().find('\n')), "t,re_z0,im_z0,re_z1,im_z1,re_z2,im_z2,re_z3,im_z3");
  EXPECT_NEAR(wrap_angle(-0.5), 2 * kPi - 0.5, 1e-15);
  EXPECT_NEAR(wrap_angle(7.0), 7.0 - 2 * kPi, 1e-15);
}

}  // namespace
}  // namespace fwm
