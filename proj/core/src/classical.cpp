#include "fwm/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fwm/csv.hpp"
#include "fwm/error.hpp"

namespace fwm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_interior(double I0, const FrozenActions& b) {
  if (!(I0 > b.lower() && I0 < b.upper()))
    throw Error(Errc::OutOfInterval, "I0 = " + format_double(I0) + " outside ]" + format_double(b.lower()) + ", " +
                                         format_double(b.upper()) + "[");
}

// Nearest representative of a to `ref` modulo 2 pi.
double align_angle(double a, double ref) { return a + kTwoPi * std::round((ref - a) / kTwoPi); }

double kummer_energy(double I0, double x, const FrozenActions& b, const FourWaveParams& p) {
  return p.detuning() * I0 + frozen_energy(b, p) + p.g * (quadratic_part(I0, b) + 2.0 * x);
}

}  // namespace

bool ModeState::on_boundary() const {
  return std::any_of(z.begin(), z.end(), [](const cplx& v) { return v == cplx(0.0, 0.0); });
}

double FrozenActions::lower() const { return std::max(0.0, b3); }
double FrozenActions::upper() const { return std::min(b1, b2 + b3); }

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Oscillatory: return "a";
    case Regime::Exponential: return "b";
    case Regime::Hyperbolic: return "c";
    case Regime::Stationary: return "stationary";
    case Regime::Fallback: return "fallback";
  }
  return "?";
}

const char* method_name(ReducedMethod m) {
  switch (m) {
    case ReducedMethod::ClosedForm: return "closed_form";
    case ReducedMethod::Linear: return "linear";
    case ReducedMethod::Rk4: return "rk4";
  }
  return "?";
}

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0) w += kTwoPi;
  return w >= kTwoPi ? 0.0 : w;
}

double hamiltonian(const ModeState& s, const FourWaveParams& p) {
  const auto& z = s.z;
  double free = 0.0;
  for (int k = 0; k < 4; ++k) free += p.omega[k] * std::norm(z[k]);
  const double cross = 2.0 * (z[0] * std::conj(z[1]) * z[2] * std::conj(z[3])).real();
  return free + p.g * (std::norm(z[0]) * std::norm(z[3]) + std::norm(z[1]) * std::norm(z[2]) + cross);
}

ActionAngle to_action_angle(const ModeState& s) {
  if (s.on_boundary()) throw Error(Errc::OnBoundary, "a mode amplitude vanishes; angles are undefined");
  const auto& z = s.z;
  ActionAngle a;
  a.I = {std::norm(z[0]), std::norm(z[0]) + std::norm(z[1]), std::norm(z[2]) + std::norm(z[3]),
         std::norm(z[0]) - std::norm(z[2])};
  const double f0 = std::arg(z[0]), f1 = std::arg(z[1]), f2 = std::arg(z[2]), f3 = std::arg(z[3]);
  a.psi = {wrap_angle(f0 - f1 + f2 - f3), wrap_angle(f1), wrap_angle(f3), wrap_angle(f3 - f2)};
  return a;
}

ModeState from_action_angle(const ActionAngle& a) {
  const auto& I = a.I;
  const std::array<double, 4> mod2{I[0], I[1] - I[0], I[0] - I[3], I[2] + I[3] - I[0]};
  const double scale = std::max({1.0, std::abs(I[0]), std::abs(I[1]), std::abs(I[2]), std::abs(I[3])});
  const auto& psi = a.psi;
  const std::array<double, 4> phi{psi[0] + psi[1] + psi[3], psi[1], psi[2] - psi[3], psi[2]};
  ModeState s;
  for (int k = 0; k < 4; ++k) {
    if (mod2[k] < -1e-14 * scale) throw Error(Errc::OutOfInterval, "actions violate the phase-space inequalities");
    s.z[k] = std::polar(std::sqrt(std::max(0.0, mod2[k])), phi[k]);
  }
  return s;
}

FrozenActions frozen_actions(const ActionAngle& a) { return {a.I[1], a.I[2], a.I[3]}; }

ReducedCoords reduce(const ActionAngle& a) { return {a.I[0], a.psi[0], frozen_actions(a)}; }

double g0(double I0, const FrozenActions& b) { return I0 * (b.b1 - I0) * (I0 - b.b3) * (b.b2 + b.b3 - I0); }

double g0_prime(double I0, const FrozenActions& b) {
  const double f1 = I0, f2 = b.b1 - I0, f3 = I0 - b.b3, f4 = b.b2 + b.b3 - I0;
  return f2 * f3 * f4 - f1 * f3 * f4 + f1 * f2 * f4 - f1 * f2 * f3;
}

std::array<double, 3> g0_action_partials(double I0, const FrozenActions& b) {
  return {I0 * (I0 - b.b3) * (b.b2 + b.b3 - I0), I0 * (b.b1 - I0) * (I0 - b.b3),
          I0 * (b.b1 - I0) * (2.0 * I0 - 2.0 * b.b3 - b.b2)};
}

double frozen_energy(const FrozenActions& b, const FourWaveParams& p) {
  const auto& w = p.omega;
  return w[1] * b.b1 + w[3] * b.b2 + (w[3] - w[2]) * b.b3;
}

double quadratic_part(double I0, const FrozenActions& b) {
  return I0 * (b.b2 + b.b3 - I0) + (b.b1 - I0) * (I0 - b.b3);
}

double reduced_hamiltonian(const ReducedCoords& rc, const FourWaveParams& p) {
  require_interior(rc.I0, rc.b);
  return p.detuning() * rc.I0 + frozen_energy(rc.b, p) +
         p.g * (quadratic_part(rc.I0, rc.b) + 2.0 * std::sqrt(g0(rc.I0, rc.b)) * std::cos(rc.psi0));
}

Regime classify(double p, double q, double r) {
  const double Delta = q * q - 4.0 * p * r;
  const bool zero = std::abs(Delta) <= 1e-12 * (q * q + 4.0 * std::abs(p * r));
  if (p < 0) {
    if (zero) return Regime::Stationary;
    return Delta > 0 ? Regime::Oscillatory : Regime::Fallback;
  }
  if (p > 0) {
    if (zero) return Regime::Exponential;
    return Delta < 0 ? Regime::Hyperbolic : Regime::Fallback;
  }
  return Regime::Fallback;
}

QuadraticCoeffs pqr(double E, const FrozenActions& b, const FourWaveParams& p) {
  if (!p.resonant()) throw Error(Errc::NotResonant, "closed forms need the resonance condition");
  if (p.g == 0.0) throw Error(Errc::ZeroCoupling, "closed forms divide by g");
  const double g = p.g, eps = E - frozen_energy(b, p);
  QuadraticCoeffs c;
  c.p = -g * g * (b.b1 - b.b2) * (b.b1 - b.b2) - 4.0 * g * eps;
  c.q = 2.0 * g * g * b.b1 * b.b3 * (b.b1 - b.b2) + 2.0 * g * (b.b1 + b.b2 + 2.0 * b.b3) * eps;
  const double s = eps + g * b.b1 * b.b3;
  c.r = -s * s;
  c.Delta = c.q * c.q - 4.0 * c.p * c.r;
  c.regime = classify(c.p, c.q, c.r);
  return c;
}

QuadraticSolution::QuadraticSolution(const QuadraticCoeffs& c, double I0_at_t0, double I0dot_at_t0, double t0)
    : c_(c), t0_(t0), shift_(0.0), amp_(0.0), rate_(0.0), C_(0.0) {
  switch (c.regime) {
    case Regime::Oscillatory: {
      shift_ = -c.q / (2.0 * c.p);
      rate_ = std::sqrt(-c.p);
      amp_ = std::sqrt(c.Delta) / (2.0 * c.p);
      const double sinC = (I0_at_t0 - shift_) / amp_;
      const double cosC = I0dot_at_t0 / (-rate_ * amp_);
      C_ = std::atan2(sinC, cosC);
      break;
    }
    case Regime::Stationary:
      shift_ = I0_at_t0;
      break;
    case Regime::Exponential: {
      shift_ = -c.q / (2.0 * c.p);
      amp_ = I0_at_t0 - shift_;
      rate_ = (I0dot_at_t0 * amp_ >= 0.0 ? 1.0 : -1.0) * std::sqrt(c.p);
      C_ = amp_;
      break;
    }
    case Regime::Hyperbolic: {
      shift_ = -c.q / (2.0 * c.p);
      rate_ = std::sqrt(c.p);
      amp_ = (I0dot_at_t0 >= 0.0 ? 1.0 : -1.0) * std::sqrt(-c.Delta) / (2.0 * c.p);
      C_ = std::asinh((I0_at_t0 - shift_) / amp_);
      break;
    }
    case Regime::Fallback:
      throw Error(Errc::UnsupportedRegime, "no closed form for p = " + format_double(c.p) +
                                               ", Delta = " + format_double(c.Delta));
  }
}

double QuadraticSolution::I0(double t) const {
  const double s = t - t0_;
  switch (c_.regime) {
    case Regime::Oscillatory: return amp_ * std::sin(-rate_ * s + C_) + shift_;
    case Regime::Exponential: return amp_ * std::exp(rate_ * s) + shift_;
    case Regime::Hyperbolic: return amp_ * std::sinh(rate_ * s + C_) + shift_;
    default: return shift_;
  }
}

double QuadraticSolution::I0_dot(double t) const {
  const double s = t - t0_;
  switch (c_.regime) {
    case Regime::Oscillatory: return -rate_ * amp_ * std::cos(-rate_ * s + C_);
    case Regime::Exponential: return rate_ * amp_ * std::exp(rate_ * s);
    case Regime::Hyperbolic: return rate_ * amp_ * std::cosh(rate_ * s + C_);
    default: return 0.0;
  }
}

static QuadraticSolution make_solution(const ReducedCoords& rc0, const FourWaveParams& p, double E, double t0) {
  const QuadraticCoeffs c = pqr(E, rc0.b, p);
  const double v0 = 2.0 * p.g * std::sqrt(g0(rc0.I0, rc0.b)) * std::sin(rc0.psi0);
  return QuadraticSolution(c, rc0.I0, v0, t0);
}

ClosedForm::ClosedForm(const ReducedCoords& rc0, const FourWaveParams& p, double t0)
    : p_(p), b_(rc0.b), E_(reduced_hamiltonian(rc0, p)), sol_(make_solution(rc0, p, E_, t0)), psi0_t0_(rc0.psi0) {}

ReducedSample ClosedForm::at(double t) const {
  ReducedSample s;
  s.t = t;
  s.I0 = sol_.I0(t);
  s.I0_dot = sol_.I0_dot(t);
  const double G = g0(s.I0, b_);
  if (!(G > 0.0)) throw Error(Errc::SingularPoint, "trajectory touches the interval end at t = " + format_double(t));
  const double eps = E_ - frozen_energy(b_, p_);
  s.phase = cplx(eps - p_.g * quadratic_part(s.I0, b_), s.I0_dot) / (2.0 * p_.g * std::sqrt(G));
  s.psi0 = std::arg(s.phase);
  return s;
}

std::vector<double> uniform_grid(double t0, double t1, int steps) {
  if (steps < 1 || !(t1 > t0)) throw Error(Errc::ConfigError, "time grid needs t1 > t0 and steps >= 1");
  std::vector<double> g(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) g[i] = t0 + (t1 - t0) * double(i) / steps;
  return g;
}

static void unwrap(std::vector<ReducedSample>& s, double psi_ref) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == 0) {
      s[i].psi0 = align_angle(std::arg(s[i].phase), psi_ref);
    } else {
      s[i].psi0 = s[i - 1].psi0 + std::arg(s[i].phase * std::conj(s[i - 1].phase));
    }
  }
}

ReducedTrajectory sample(const ClosedForm& cf, const std::vector<double>& grid) {
  ReducedTrajectory tr;
  tr.method = ReducedMethod::ClosedForm;
  tr.b = cf.actions();
  tr.energy = cf.energy();
  tr.coeffs = cf.coeffs();
  tr.samples.reserve(grid.size());
  for (double t : grid) tr.samples.push_back(cf.at(t));
  if (!tr.samples.empty()) unwrap(tr.samples, std::arg(tr.samples.front().phase));
  return tr;
}

ReducedTrajectory rk4_reduced(const ReducedCoords& rc0, const FourWaveParams& p, const std::vector<double>& grid,
                              double max_step) {
  ReducedTrajectory tr;
  tr.method = ReducedMethod::Rk4;
  tr.b = rc0.b;
  tr.energy = reduced_hamiltonian(rc0, p);
  const FrozenActions b = rc0.b;
  const double g = p.g, Om = p.detuning();
  const double sq = std::sqrt(g0(rc0.I0, b));
  std::array<double, 3> u{sq * std::cos(rc0.psi0), sq * std::sin(rc0.psi0), rc0.I0};  // x, y, I0

  auto rhs = [&](const std::array<double, 3>& v) {
    const double Qp = b.b1 + b.b2 + 2.0 * b.b3 - 4.0 * v[2];
    const double w = Om + g * Qp;
    return std::array<double, 3>{-w * v[1], w * v[0] + g * g0_prime(v[2], b), 2.0 * g * v[1]};
  };
  auto record = [&](double t) {
    ReducedSample s;
    s.t = t;
    s.I0 = u[2];
    s.I0_dot = 2.0 * g * u[1];
    const double G = g0(u[2], b);
    const cplx xy(u[0], u[1]);
    s.phase = G > 0.0 ? xy / std::sqrt(G) : xy / std::abs(xy);
    tr.samples.push_back(s);
  };

  if (grid.empty()) return tr;
  record(grid.front());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double span = grid[i] - grid[i - 1];
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(span) / max_step - 1e-9)));
    const double h = span / n;
    for (int k = 0; k < n; ++k) {
      auto add = [](const std::array<double, 3>& a, const std::array<double, 3>& d, double f) {
        return std::array<double, 3>{a[0] + f * d[0], a[1] + f * d[1], a[2] + f * d[2]};
      };
      const auto k1 = rhs(u);
      const auto k2 = rhs(add(u, k1, 0.5 * h));
      const auto k3 = rhs(add(u, k2, 0.5 * h));
      const auto k4 = rhs(add(u, k3, h));
      for (int j = 0; j < 3; ++j) u[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    record(grid[i]);
  }
  unwrap(tr.samples, rc0.psi0);
  return tr;
}

ReducedTrajectory solve_reduced(const ReducedCoords& rc0, const FourWaveParams& p, const std::vector<double>& grid,
                                double max_step) {
  p.validate();
  require_interior(rc0.I0, rc0.b);
  if (p.g == 0.0) {
    ReducedTrajectory tr;
    tr.method = ReducedMethod::Linear;
    tr.b = rc0.b;
    tr.energy = reduced_hamiltonian(rc0, p);
    const double t0 = grid.empty() ? 0.0 : grid.front();
    for (double t : grid) {
      ReducedSample s;
      s.t = t;
      s.I0 = rc0.I0;
      s.psi0 = rc0.psi0 + p.detuning() * (t - t0);
      s.phase = std::polar(1.0, s.psi0);
      tr.samples.push_back(s);
    }
    return tr;
  }
  if (p.resonant()) {
    const double E = reduced_hamiltonian(rc0, p);
    if (pqr(E, rc0.b, p).regime != Regime::Fallback) {
      const double t0 = grid.empty() ? 0.0 : grid.front();
      ReducedTrajectory tr = sample(ClosedForm(rc0, p, t0), grid);
      if (!tr.samples.empty()) unwrap(tr.samples, rc0.psi0);
      return tr;
    }
  }
  return rk4_reduced(rc0, p, grid, max_step);
}

std::array<double, 3> outer_phase_rates(const ReducedSample& s, const FrozenActions& b, const FourWaveParams& p) {
  const auto& w = p.omega;
  const double g = p.g, I0 = s.I0;
  std::array<double, 3> rate{w[1] + g * (I0 - b.b3), w[3] + g * I0, (w[3] - w[2]) + g * (2.0 * I0 - b.b1)};
  if (g == 0.0) return rate;
  const double G = g0(I0, b);
  const double scale = std::max({1.0, std::abs(b.b1), std::abs(b.b2), std::abs(b.b3)});
  if (!(G > 1e-14 * std::pow(scale, 4)))
    throw Error(Errc::SingularPoint, "G0 vanishes on the grid at t = " + format_double(s.t));
  const double f = g * s.phase.real() / std::abs(s.phase) / std::sqrt(G);
  const auto dG = g0_action_partials(I0, b);
  for (int k = 0; k < 3; ++k) rate[k] += dG[k] * f;
  return rate;
}

OuterPhases integrate_outer_phases(const ReducedTrajectory& traj, const std::array<double, 3>& psi_at_t0,
                                   const FourWaveParams& p) {
  const auto& s = traj.samples;
  const std::size_t n = s.size();
  OuterPhases out;
  out.psi1.assign(n, psi_at_t0[0]);
  out.psi2.assign(n, psi_at_t0[1]);
  out.psi3.assign(n, psi_at_t0[2]);
  if (n < 2) return out;

  const double h = s[1].t - s[0].t;
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs((s[i].t - s[i - 1].t) - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw Error(Errc::ConfigError, "phase quadrature needs a uniform grid");

  std::vector<std::array<double, 3>> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = outer_phase_rates(s[i], traj.b, p);

  std::array<std::vector<double>*, 3> dst{&out.psi1, &out.psi2, &out.psi3};
  for (int k = 0; k < 3; ++k) {
    auto& acc = *dst[k];
    auto F = [&](std::size_t i) { return f[i][k]; };
    // Even nodes: composite Simpson. Odd nodes: one third-order interval rule on top.
    for (std::size_t i = 2; i < n; i += 2) acc[i] = acc[i - 2] + h / 3.0 * (F(i - 2) + 4.0 * F(i - 1) + F(i));
    for (std::size_t i = 1; i < n; i += 2) {
      double last;
      if (i + 1 < n)
        last = h / 12.0 * (5.0 * F(i - 1) + 8.0 * F(i) - F(i + 1));
      else if (i >= 2)
        last = h / 12.0 * (-F(i - 2) + 8.0 * F(i - 1) + 5.0 * F(i));
      else
        last = 0.5 * h * (F(i - 1) + F(i));
      acc[i] = acc[i - 1] + last;
    }
  }
  return out;
}

std::vector<ModeState> reconstruct_states(const ReducedTrajectory& traj, const OuterPhases& ph) {
  std::vector<ModeState> out;
  out.reserve(traj.samples.size());
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    ActionAngle a;
    a.I = {traj.samples[i].I0, traj.b.b1, traj.b.b2, traj.b.b3};
    a.psi = {traj.samples[i].psi0, ph.psi1[i], ph.psi2[i], ph.psi3[i]};
    out.push_back(from_action_angle(a));
  }
  return out;
}

std::array<cplx, 4> vector_field(const ModeState& s, const FourWaveParams& p) {
  const auto& z = s.z;
  const auto& w = p.omega;
  const double g = p.g;
  const cplx I(0.0, 1.0);
  return {
      I * (w[0] * z[0] + g * (z[0] * std::norm(z[3]) + z[1] * std::conj(z[2]) * z[3])),
      I * (w[1] * z[1] + g * (z[1] * std::norm(z[2]) + z[0] * z[2] * std::conj(z[3]))),
      I * (w[2] * z[2] + g * (z[2] * std::norm(z[1]) + std::conj(z[0]) * z[1] * z[3])),
      I * (w[3] * z[3] + g * (z[3] * std::norm(z[0]) + z[0] * std::conj(z[1]) * z[2])),
  };
}

FullTrajectory rk4_full(const ModeState& z0, const FourWaveParams& p, double t1, double dt, int stride) {
  if (!(dt > 0.0)) throw Error(Errc::ConfigError, "RK4 step must be positive");
  stride = std::max(1, stride);
  const int steps = static_cast<int>(std::llround(t1 / dt));
  const double h = steps > 0 ? t1 / steps : 0.0;

  auto invariants = [&](const ModeState& s) {
    const auto& z = s.z;
    return std::array<double, 4>{hamiltonian(s, p), std::norm(z[0]) + std::norm(z[1]),
                                 std::norm(z[2]) + std::norm(z[3]), std::norm(z[0]) - std::norm(z[2])};
  };
  auto axpy = [](const ModeState& a, const std::array<cplx, 4>& d, double f) {
    ModeState r = a;
    for (int k = 0; k < 4; ++k) r.z[k] += f * d[k];
    return r;
  };

  FullTrajectory tr;
  ModeState z = z0;
  const auto inv0 = invariants(z);
  tr.t.push_back(0.0);
  tr.z.push_back(z);
  for (int i = 1; i <= steps; ++i) {
    const auto k1 = vector_field(z, p);
    const auto k2 = vector_field(axpy(z, k1, 0.5 * h), p);
    const auto k3 = vector_field(axpy(z, k2, 0.5 * h), p);
    const auto k4 = vector_field(axpy(z, k3, h), p);
    for (int k = 0; k < 4; ++k) z.z[k] += h / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
    const auto inv = invariants(z);
    tr.drift_H = std::max(tr.drift_H, std::abs(inv[0] - inv0[0]));
    for (int k = 0; k < 3; ++k) tr.drift_I[k] = std::max(tr.drift_I[k], std::abs(inv[k + 1] - inv0[k + 1]));
    if (i % stride == 0 || i == steps) {
      tr.t.push_back(i * h);
      tr.z.push_back(z);
    }
  }
  return tr;
}

void write_reduced_csv(std::ostream& out, const ReducedTrajectory& traj, const OuterPhases& ph,
                       const FourWaveParams& p) {
  CsvWriter w(out, {"t", "I0", "psi0", "psi1", "psi2", "psi3", "E_drift"});
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const auto& s = traj.samples[i];
    const double x = std::sqrt(std::max(0.0, g0(s.I0, traj.b))) * s.phase.real() / std::abs(s.phase);
    const double drift = kummer_energy(s.I0, x, traj.b, p) - traj.energy;
    w.row({s.t, s.I0, wrap_angle(s.psi0), wrap_angle(ph.psi1[i]), wrap_angle(ph.psi2[i]), wrap_angle(ph.psi3[i]),
           drift});
  }
}

void write_full_csv(std::ostream& out, const std::vector<double>& t, const std::vector<ModeState>& z) {
  CsvWriter w(out, {"t", "re_z0", "im_z0", "re_z1", "im_z1", "re_z2", "im_z2", "re_z3", "im_z3"});
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& s = z[i].z;
    w.row({t[i], s[0].real(), s[0].imag(), s[1].real(), s[1].imag(), s[2].real(), s[2].imag(), s[3].real(),
           s[3].imag()});
  }
}

}  // namespace fwm
