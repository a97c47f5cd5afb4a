#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "fwm/classical.hpp"
#include "fwm/coherent.hpp"
#include "fwm/csv.hpp"
#include "fwm/dualhahn.hpp"
#include "fwm/error.hpp"
#include "fwm/fock.hpp"
#include "fwm/kummer.hpp"
#include "fwm/quantum.hpp"
#include "fwm/sector.hpp"
#include "fwm/spinrep.hpp"
#include "fwm/tridiagonal.hpp"

namespace fwm::cli {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& r, double a, double b) { return std::uniform_real_distribution<double>(a, b)(r); }
int uniform_int(Rng& r, int a, int b) { return std::uniform_int_distribution<int>(a, b)(r); }

FourWaveParams resonant_params(Rng& r, double hbar) {
  FourWaveParams p;
  p.omega = {uniform(r, 0.5, 2.0), uniform(r, 0.5, 2.0), uniform(r, 0.5, 2.0), 0.0};
  p.omega[3] = p.omega[0] - p.omega[1] + p.omega[2];
  if (p.omega[3] <= 0.0) p.omega[1] = p.omega[0] + p.omega[2] - 0.7, p.omega[3] = 0.7;
  p.g = uniform(r, 0.3, 1.5);
  p.hbar = hbar;
  return p;
}

ModeState random_state(Rng& r, double scale) {
  ModeState z;
  for (cplx& v : z.z) v = std::polar(uniform(r, 0.2, 1.0) * scale, uniform(r, 0.0, 2.0 * std::numbers::pi));
  return z;
}

class Suite {
 public:
  explicit Suite(std::ostream& log) : log_(log) {}

  void run(const std::string& module, const std::string& name, double tol, const std::function<double()>& body) {
    Check c{module, name, 0.0, tol, false, {}};
    try {
      c.deviation = body();
      c.pass = std::isfinite(c.deviation) && c.deviation <= tol;
    } catch (const std::exception& e) {
      c.deviation = std::numeric_limits<double>::infinity();
      c.note = e.what();
    }
    log_ << (c.pass ? "PASS " : "FAIL ") << c.module << '/' << c.name << " deviation=" << format_double(c.deviation)
         << " tol=" << format_double(c.tolerance);
    if (!c.note.empty()) log_ << " error=" << c.note;
    log_ << '\n';
    checks_.push_back(std::move(c));
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::ostream& log_;
  std::vector<Check> checks_;
};

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

void sector_checks(Suite& s) {
  s.run("sector", "partition_T8", 0.0, [] {
    const TruncatedFockSpace space(8);
    std::vector<int> seen(space.size(), 0);
    double bad = 0.0;
    for (const SectorBlock& b : sector_partition(space)) {
      if (int(b.indices.size()) != shape_of(b.label).dim()) bad += 1.0;
      for (std::size_t i : b.indices) ++seen[i];
    }
    for (int v : seen) bad += std::abs(v - 1);
    return bad;
  });
  s.run("sector", "shape_230", 0.0, [] {
    const SectorShape sh = shape_of({2, 3, 0});
    return double(sh.subcase != Subcase::i) + std::abs(sh.N - 2) + std::abs(sh.gamma) + std::abs(sh.delta - 1);
  });
  s.run("sector", "fock_roundtrip_T10", 0.0, [] {
    double bad = 0.0;
    for (const SectorLabel& c : sectors_up_to(10)) {
      const auto states = basis_states(c);
      for (std::size_t i = 0; i < states.size(); ++i) {
        const SectorLocation loc = sector_of_fock(states[i]);
        if (!(loc.label == c) || loc.index != int(i)) bad += 1.0;
      }
    }
    return bad;
  });
}

void dualhahn_checks(Suite& s) {
  Rng rng(11);
  double ev = 0.0, orth40 = 0.0, orth80 = 0.0;
  bool computed = false;
  auto sweep = [&] {
    if (computed) return;
    computed = true;
    for (int trial = 0; trial < 60; ++trial) {
      const DualHahnParams p{uniform_int(rng, 0, 10), uniform_int(rng, 0, 10), uniform_int(rng, 1, 80)};
      const EigenSystem es = oracle_diagonalize(dual_hahn_jacobi(p), false);
      const std::vector<double> lam = eigenvalues(p);
      for (std::size_t k = 0; k < lam.size(); ++k)
        ev = std::max(ev, std::abs(es.values[k] - lam[k]) / std::max(1.0, lam[k]));
      const SpectralTable t = transition_matrix(p);
      const double o = (t.R * t.R.transpose() - Eigen::MatrixXd::Identity(p.N + 1, p.N + 1)).cwiseAbs().maxCoeff();
      (p.N <= 40 ? orth40 : orth80) = std::max(p.N <= 40 ? orth40 : orth80, o);
    }
  };
  s.run("dualhahn", "eigenvalues_vs_QL", 1e-8, [&] { return sweep(), ev; });
  s.run("dualhahn", "orthogonality_N<=40", 1e-10, [&] { return sweep(), orth40; });
  s.run("dualhahn", "orthogonality_N<=80", 1e-8, [&] { return sweep(), orth80; });
  s.run("dualhahn", "recurrence_vs_sum", 1e-12, [] {
    double m = 0.0;
    for (const DualHahnParams p : {DualHahnParams{1, 2, 5}, DualHahnParams{3, 0, 6}, DualHahnParams{0, 4, 4}})
      for (int n = 0; n <= p.N; ++n)
        for (int k = 0; k <= p.N; ++k)
          m = std::max(m, std::abs(polynomial_value(n, k, p) - polynomial_value_recurrence(n, k, p)) /
                              std::max(1.0, std::abs(polynomial_value(n, k, p))));
    return m;
  });
}

void quantum_checks(Suite& s) {
  s.run("quantum", "sector_commutators_T10", 1e-9, [] {
    double m = 0.0;
    for (const SectorLabel& c : sectors_up_to(10)) {
      const double scale = std::pow(std::max(1, shape_of(c).N + shape_of(c).gamma + shape_of(c).delta), 3);
      m = std::max(m, commutator_check(c) / scale);
    }
    return m;
  });
  s.run("quantum", "full_blocks_T8", 1e-8, [] {
    Rng rng(21);
    const FourWaveParams p = resonant_params(rng, 0.7);
    const TruncatedFockSpace space(8);
    const Eigen::MatrixXd H = Eigen::MatrixXd(build_full_hamiltonian(space, p));
    double m = 0.0;
    Eigen::MatrixXd mask = Eigen::MatrixXd::Zero(H.rows(), H.cols());
    for (const SectorBlock& b : sector_partition(space)) {
      const Eigen::Index d = Eigen::Index(b.indices.size());
      Eigen::MatrixXd block(d, d);
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
          block(i, j) = H(b.indices[i], b.indices[j]);
          mask(b.indices[i], b.indices[j]) = 1.0;
        }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block, Eigen::EigenvaluesOnly);
      const SectorSpectrum sp = spectral_decomposition(b.label, p);
      std::vector<double> e = sp.energies;
      std::sort(e.begin(), e.end());
      for (Eigen::Index k = 0; k < d; ++k)
        m = std::max(m, std::abs(es.eigenvalues()(k) - p.hbar * e[k]) / std::max(1.0, std::abs(p.hbar * e[k])));
    }
    m = std::max(m, (H.array() * (1.0 - mask.array())).abs().maxCoeff());
    return m;
  });
  s.run("quantum", "two_level_sin2", 1e-12, [] {
    FourWaveParams p;
    p.g = 0.9, p.hbar = 0.8;
    double m = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double t = 0.01 * i;
      const double e = std::sin(p.g * p.hbar * t);
      m = std::max(m, std::abs(two_level_closed_form(0, 0, p, t).p_flip - e * e));
    }
    return m;
  });
  s.run("quantum", "two_level_vs_propagator", 1e-10, [] {
    Rng rng(31);
    double m = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const int ga = uniform_int(rng, 0, 6), de = uniform_int(rng, 0, 6);
      const FourWaveParams p = resonant_params(rng, 1.0);
      const double t = uniform(rng, 0.0, 5.0);
      const TwoLevel tl = two_level_closed_form(ga, de, p, t);
      const SectorLabel c = label_for_shape(1, ga, de, Subcase::i);
      m = std::max({m, std::abs(tl.p_flip - transition_probability(c, p, 1, 0, t)),
                    std::abs(tl.p_stay + tl.p_flip - 1.0)});
    }
    return m;
  });
  s.run("quantum", "propagator_unitary_and_cosine_sum", 1e-10, [] {
    Rng rng(41);
    const FourWaveParams p = resonant_params(rng, 1.0);
    const SectorLabel c{5, 4, 1};
    const SectorOperator U = propagator(c, p, 1.7);
    const Eigen::Index d = U.matrix.rows();
    double m = max_abs(U.matrix * U.matrix.adjoint() - Eigen::MatrixXcd::Identity(d, d));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        m = std::max(m, std::abs(transition_probability(c, p, a, b, 1.7) -
                                 transition_probability_cosine_sum(c, p, a, b, 1.7)));
    return m;
  });
  s.run("quantum", "heisenberg_derivative", 1e-6, [] {
    Rng rng(51);
    const FourWaveParams p = resonant_params(rng, 1.0);
    const SectorLabel c{4, 3, 0};
    const SectorOperator F = sector_ops(c).A;
    const double t = 0.8, h = 1e-4;
    const Eigen::MatrixXcd d =
        (heisenberg_evolve(F, c, p, t + h).matrix - heisenberg_evolve(F, c, p, t - h).matrix) / (2.0 * h);
    const Eigen::MatrixXcd Ft = heisenberg_evolve(F, c, p, t).matrix;
    const Eigen::MatrixXcd H = reduced_hamiltonian(c, p).matrix;
    return max_abs(d - cplx(0.0, 1.0) * (H * Ft - Ft * H)) / std::max(1.0, max_abs(d));
  });
}

void classical_checks(Suite& s) {
  FourWaveParams p;
  const ReducedCoords rc0{1.0, std::numbers::pi / 2, {2.0, 2.0, 0.0}};
  s.run("classical", "worked_closed_form_formula", 1e-12, [&] {
    const ClosedForm cf(rc0, p);
    double m = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double t = 0.01 * i;
      m = std::max(m, std::abs(cf.at(t).I0 - (1.0 + std::sqrt(0.5) * std::sin(2.0 * std::sqrt(2.0) * t))));
    }
    return m;
  });
  s.run("classical", "worked_closed_form_vs_rk4", 1e-6, [&] {
    const ClosedForm cf(rc0, p);
    const ModeState z0 = from_action_angle({{1.0, 2.0, 2.0, 0.0}, {std::numbers::pi / 2, 0.0, 0.0, 0.0}});
    const FullTrajectory ft = rk4_full(z0, p, 10.0, 1e-3, 100);
    double m = 0.0;
    for (std::size_t i = 0; i < ft.t.size(); ++i) m = std::max(m, std::abs(std::norm(ft.z[i].z[0]) - cf.at(ft.t[i]).I0));
    return m;
  });
  s.run("classical", "rk4_conservation_drift", 1e-8, [&] {
    const ModeState z0 = from_action_angle({{1.0, 2.0, 2.0, 0.0}, {std::numbers::pi / 2, 0.0, 0.0, 0.0}});
    const FullTrajectory ft = rk4_full(z0, p, 10.0, 1e-3, 1000);
    return std::max({ft.drift_H, ft.drift_I[0], ft.drift_I[1], ft.drift_I[2]});
  });
  s.run("classical", "phase_contract_random", 1e-8, [] {
    Rng rng(61);
    double m = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
      const FourWaveParams p = resonant_params(rng, 1.0);
      const ReducedCoords rc = reduce(to_action_angle(random_state(rng, 1.5)));
      const ClosedForm cf(rc, p);
      const QuadraticCoeffs& q = cf.coeffs();
      for (int i = 0; i <= 200; ++i) {
        const ReducedSample smp = cf.at(0.05 * i);
        const double res = smp.I0_dot * smp.I0_dot - (q.p * smp.I0 * smp.I0 + q.q * smp.I0 + q.r);
        const double scale = std::max(1.0, std::abs(q.r) + std::abs(q.q) + std::abs(q.p));
        m = std::max({m, std::abs(std::abs(smp.phase) - 1.0),
                      std::abs(reduced_hamiltonian({smp.I0, smp.psi0, rc.b}, p) - cf.energy()) /
                          std::max(1.0, std::abs(cf.energy())),
                      std::abs(res) / scale});
      }
    }
    return m;
  });
  s.run("classical", "reconstruction_vs_full_rk4", 1e-5, [] {
    FourWaveParams p;
    const ModeState z0{{cplx(0.0, 1.0), cplx(1.0), cplx(1.0), cplx(1.0)}};
    const ActionAngle aa = to_action_angle(z0);
    const ReducedTrajectory tr = solve_reduced(reduce(aa), p, uniform_grid(0.0, 5.0, 1000));
    const OuterPhases ph = integrate_outer_phases(tr, {aa.psi[1], aa.psi[2], aa.psi[3]}, p);
    const std::vector<ModeState> zs = reconstruct_states(tr, ph);
    const FullTrajectory ft = rk4_full(z0, p, 5.0, 5e-4, 10);
    if (zs.size() != ft.z.size()) throw Error(Errc::ShapeMismatch, "grids differ");
    double m = 0.0;
    for (std::size_t i = 0; i < zs.size(); ++i)
      for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(zs[i].z[k] - ft.z[i].z[k]));
    return m;
  });
}

void kummer_checks(Suite& s) {
  Rng rng(71);
  std::vector<ShapeReport> reports;
  for (int trial = 0; trial < 10; ++trial) {
    const FourWaveParams p = resonant_params(rng, 1.0);
    const ReducedCoords rc = reduce(to_action_angle(random_state(rng, 1.5)));
    reports.push_back(trajectory_on_shape(solve_reduced(rc, p, uniform_grid(0.0, 10.0, 500)), p));
  }
  s.run("kummer", "casimir_on_trajectories", 1e-9, [&] {
    double m = 0.0;
    for (const ShapeReport& r : reports) m = std::max(m, r.max_casimir);
    return m;
  });
  s.run("kummer", "energy_on_trajectories", 1e-8, [&] {
    double m = 0.0;
    for (const ShapeReport& r : reports) m = std::max(m, r.max_energy_deviation);
    return m;
  });
  const ShapePoint pt = phi_map({0.8, 0.6, {2.0, 1.5, 0.3}});
  s.run("kummer", "nambu_table", 1e-7, [&] {
    const ShapeField X = [](double x, double, double) { return x; };
    const ShapeField Y = [](double, double y, double) { return y; };
    const ShapeField I = [](double, double, double i0) { return i0; };
    return std::abs(nambu_bracket(I, X, pt) + pt.y) + std::abs(nambu_bracket(I, Y, pt) - pt.x) +
           std::abs(nambu_bracket(X, Y, pt) - 0.5 * g0_prime(pt.I0, pt.b));
  });
  s.run("kummer", "nambu_second_order", 0.2, [&] {
    const ShapeField f = [](double x, double y, double i0) { return std::sin(x) + i0 * i0 * i0 + y; };
    const ShapeField g = [](double x, double y, double i0) { return std::cos(y) * i0 + x * x * x; };
    const auto gc = casimir_gradient(pt);
    const std::array<double, 3> gf{std::cos(pt.x), 1.0, 3.0 * pt.I0 * pt.I0};
    const std::array<double, 3> gg{3.0 * pt.x * pt.x, -std::sin(pt.y) * pt.I0, std::cos(pt.y)};
    const double exact = gc[0] * (gf[1] * gg[2] - gf[2] * gg[1]) - gc[1] * (gf[0] * gg[2] - gf[2] * gg[0]) +
                         gc[2] * (gf[0] * gg[1] - gf[1] * gg[0]);
    const double e1 = std::abs(nambu_bracket(f, g, pt, 2e-2) - exact);
    const double e2 = std::abs(nambu_bracket(f, g, pt, 1e-2) - exact);
    // observed order under step halving, compared with 2
    return std::abs(std::log2(e1 / e2) - 2.0);
  });
}

void coherent_checks(Suite& s) {
  s.run("coherent", "symbol_of_H_identity", 1e-12, [] {
    Rng rng(81);
    double m = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const FourWaveParams p = resonant_params(rng, uniform(rng, 0.05, 1.0));
      const NormalOrderedObservable Hs = normal_order(hamiltonian_terms(p), p.hbar);
      const ModeState z = random_state(rng, 1.5);
      const double shift = p.hbar * p.g * (std::norm(z.z[0]) + std::norm(z.z[1]));
      m = std::max(m, std::abs(covariant_symbol(Hs, z) - hamiltonian(z, p) - shift) / std::max(1.0, hamiltonian(z, p)));
    }
    return m;
  });
  s.run("coherent", "star_bracket_vs_poisson_table", 1e-12, [] {
    Rng rng(82);
    const Generator gens[] = {Generator::I0, Generator::I1, Generator::I2, Generator::I3, Generator::x, Generator::y};
    double m = 0.0;
    for (Generator a : gens)
      for (Generator b : gens) {
        const NormalOrderedObservable L = star_bracket_limit(generator_symbol(a), generator_symbol(b));
        m = std::max(m, max_coeff_diff(L, poisson_bracket(generator_symbol(a), generator_symbol(b))));
        for (int k = 0; k < 5; ++k) {
          const ModeState z = random_state(rng, 1.2);
          m = std::max(m, std::abs(covariant_symbol(L, z) - generator_bracket_table(a, b, z)));
        }
      }
    return m;
  });
  s.run("coherent", "star_associativity_vs_wick", 1e-12, [] {
    const NormalOrderedObservable f = generator_symbol(Generator::x) + generator_symbol(Generator::I0);
    const NormalOrderedObservable g = generator_symbol(Generator::y);
    const NormalOrderedObservable h = NormalOrderedObservable::monomial({1, 0, 0, 1, 0, 1, 1, 0}, cplx(0.3, 0.2));
    const double hb = 0.37;
    const auto fg = star_product(f, g, hb);
    double m = max_coeff_diff(star_product(fg, h, hb), star_product(f, star_product(g, h, hb), hb));
    std::vector<OperatorTerm> words;
    for (const OperatorTerm& a : to_words(f))
      for (const OperatorTerm& b : to_words(g)) {
        OperatorTerm t{a.coef * b.coef, a.word};
        t.word.insert(t.word.end(), b.word.begin(), b.word.end());
        words.push_back(t);
      }
    return std::max(m, max_coeff_diff(fg, normal_order(words, hb)));
  });
  s.run("coherent", "projection_identity", 1e-12, [] {
    Rng rng(83);
    double m = 0.0;
    for (const SectorLabel& c : sectors_up_to(7)) {
      const ModeState z = random_state(rng, 1.3);
      const double hb = uniform(rng, 0.3, 1.5);
      const Projection pr = project_coherent(z, c, hb);
      const std::vector<cplx> direct = sector_restriction(z, c, hb);
      for (std::size_t n = 0; n < direct.size(); ++n)
        m = std::max(m, std::abs(direct[n] - pr.alpha * pr.hbar_factor * pr.reduced.coeffs[n]) /
                            std::max(1e-300, std::abs(direct[n])));
    }
    return m;
  });
  s.run("coherent", "kernel_forms_agree", 1e-12, [] {
    Rng rng(84);
    double m = 0.0;
    for (const SectorLabel& c : sectors_up_to(8)) {
      const cplx a = std::polar(uniform(rng, 0.1, 2.0), uniform(rng, 0.0, 6.0));
      const cplx b = std::polar(uniform(rng, 0.1, 2.0), uniform(rng, 0.0, 6.0));
      const cplx k1 = reproducing_kernel(a, b, c);
      const ReducedCoherent ra = reduced_coherent(a, c), rb = reduced_coherent(b, c);
      cplx ip = 0.0;
      for (std::size_t n = 0; n < ra.coeffs.size(); ++n) ip += std::conj(ra.coeffs[n]) * rb.coeffs[n];
      m = std::max({m, std::abs(k1 - ip) / std::abs(ip),
                    std::abs(k1 - reproducing_kernel_hypergeometric(a, b, c)) / std::abs(ip)});
    }
    return m;
  });
  s.run("coherent", "radial_moments", 1e-4, [] {
    double m = 0.0;
    for (const SectorLabel& c : {label_for_shape(0, 0, 0, Subcase::i), label_for_shape(2, 1, 2, Subcase::i),
                                 label_for_shape(3, 2, 0, Subcase::i), label_for_shape(3, 0, 2, Subcase::iii)})
      for (const MomentRow& r : radial_moments(c)) m = std::max(m, r.rel_err);
    return m;
  });
  s.run("coherent", "holomorphic_intertwining", 1e-12, [] {
    double m = 0.0;
    for (const SectorLabel& c : sectors_up_to(8)) m = std::max(m, holomorphic_intertwining_error(c));
    return m;
  });
  s.run("coherent", "amplitude_vs_dense_oracle_T8", 1e-8, [] {
    Rng rng(85);
    const FourWaveParams p = resonant_params(rng, 0.8);
    const TruncatedFockSpace space(8);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(build_full_hamiltonian(space, p)));
    const ModeState z = random_state(rng, 1.0);
    const CoherentTable ct = coherent_coeffs(z, p.hbar, space);
    Eigen::VectorXcd bra(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) bra(Eigen::Index(i)) = ct.coeffs[i];
    double m = 0.0;
    for (double t : {0.0, 0.9, 2.3}) {
      Eigen::VectorXcd ph(es.eigenvalues().size());
      for (Eigen::Index k = 0; k < ph.size(); ++k) ph(k) = std::polar(1.0, es.eigenvalues()(k) * t / p.hbar);
      const Eigen::MatrixXcd U = es.eigenvectors().cast<cplx>() * ph.asDiagonal() * es.eigenvectors().transpose().cast<cplx>();
      for (const FockState& n : {FockState{1, 2, 0, 1}, FockState{2, 0, 1, 3}, FockState{0, 1, 1, 0}}) {
        const Eigen::Index j = Eigen::Index(*space.index_of(n));
        const cplx oracle = bra.dot(U.col(j)) / std::sqrt(ct.norm2_exact);
        m = std::max(m, std::abs(fock_coherent_amplitude(z, n, t, p) - oracle));
      }
    }
    return m;
  });
}

void spin_checks(Suite& s) {
  Rng rng(91);
  FourWaveParams p = resonant_params(rng, 0.6);
  p.omega[1] += 0.37;  // operator identities hold off resonance too
  const SpinOperators ops = build_spin_ops(6, p.hbar);
  s.run("spinrep", "so4_table_T6", 1e-12, [&] {
    double m = 0.0;
    for (const AuditRow& r : so4_audit(ops)) m = std::max(m, r.deviation);
    return m;
  });
  s.run("spinrep", "H_equals_H_D", 1e-10,
        [&] { return max_abs(SparseC(h_dicke(ops, p) - build_full_hamiltonian(6, p).cast<cplx>())); });
  s.run("spinrep", "H_D_equals_H_MS", 1e-12, [&] { return max_abs(SparseC(h_dicke(ops, p) - h_ms(ops, p))); });
  s.run("spinrep", "H_MS_conserved_set", 1e-12, [&] {
    double m = 0.0;
    for (const AuditRow& r : conservation_audit(ops, p)) m = std::max(m, r.deviation);
    return m;
  });
  s.run("spinrep", "classical_casimirs_and_brackets", 1e-12, [&] {
    Rng r2(92);
    double m = 0.0;
    for (int i = 0; i < 50; ++i) {
      const ClassicalSpin c = classical_spin_functions(random_state(r2, 1.5));
      m = std::max({m, std::abs(c.M1 * c.M1 + c.M2 * c.M2 + c.M3 * c.M3 - c.L * c.L),
                    std::abs(c.S1 * c.S1 + c.S2 * c.S2 + c.S3 * c.S3 - c.R * c.R)});
    }
    using SC = SpinComponent;
    const std::array<std::array<SC, 3>, 6> cyc{{{SC::M1, SC::M2, SC::M3},
                                                 {SC::M2, SC::M3, SC::M1},
                                                 {SC::M3, SC::M1, SC::M2},
                                                 {SC::S1, SC::S2, SC::S3},
                                                 {SC::S2, SC::S3, SC::S1},
                                                 {SC::S3, SC::S1, SC::S2}}};
    for (const auto& t : cyc)
      m = std::max(m, max_coeff_diff(poisson_bracket(spin_symbol(t[0]), spin_symbol(t[1])), spin_symbol(t[2])));
    return m;
  });
}

}  // namespace

std::vector<Check> run_verify(std::ostream& log) {
  Suite s(log);
  sector_checks(s);
  dualhahn_checks(s);
  quantum_checks(s);
  classical_checks(s);
  kummer_checks(s);
  coherent_checks(s);
  spin_checks(s);
  return s.take();
}

}  // namespace fwm::cli
