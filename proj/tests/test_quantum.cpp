#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "fwm/error.hpp"
#include "fwm/fock.hpp"
#include "fwm/quantum.hpp"
#include "support.hpp"

namespace fwm {
namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

SectorLabel two_level(int gamma, int delta) { return label_for_shape(1, gamma, delta, Subcase::i); }

TEST(Fock, SizeAndLookup) {
  for (int T : {0, 1, 4, 8}) {
    const TruncatedFockSpace s(T);
    EXPECT_EQ(s.size(), binomial_size(T));
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(*s.index_of(s.state(i)), i);
  }
  EXPECT_FALSE(TruncatedFockSpace(3).index_of({2, 2, 0, 0}).has_value());
}

TEST(Fock, LadderActions) {
  const auto r = apply_word({ann(1)}, {0, 3, 0, 0}, 0.5);
  ASSERT_TRUE(r);
  EXPECT_NEAR(r->first, std::sqrt(1.5), 1e-15);
  EXPECT_EQ(r->second, (FockState{0, 2, 0, 0}));
  EXPECT_FALSE(apply_word({ann(2)}, {1, 1, 0, 1}, 1.0));
  // word order: rightmost acts first
  const auto w = apply_word({ann(0), cre(0)}, {0, 0, 0, 0}, 2.0);
  ASSERT_TRUE(w);
  EXPECT_NEAR(w->first, 2.0, 1e-15);
}

TEST(Quantum, SectorOpsTwoLevelExample) {
  const SectorLadder s = sector_ops(two_level(0, 0));
  Eigen::Matrix2cd A, As, A0;
  A << 0, 1, 0, 0;
  As << 0, 0, 1, 0;
  A0 << 0, 0, 0, 1;
  EXPECT_LE(max_abs(s.A.matrix - A), 0.0);
  EXPECT_LE(max_abs(s.Astar.matrix - As), 0.0);
  EXPECT_LE(max_abs(s.A0.matrix - A0), 0.0);
  EXPECT_EQ(commutator_check(two_level(0, 0)), 0.0);
  const SectorLadder z = sector_ops({0, 0, 0});
  EXPECT_EQ(z.A.matrix(0, 0), cplx(0.0));
  EXPECT_EQ(commutator_check({0, 0, 0}), 0.0);
}

TEST(Quantum, SectorOpsOffsetInSubcasesIiiIv) {
  const SectorLadder s = sector_ops({3, 1, 1});
  EXPECT_EQ(s.A0.matrix(0, 0), cplx(1.0));
  EXPECT_EQ(s.A0.matrix(1, 1), cplx(2.0));
}

TEST(QuantumProperty, LadderProductsAndCommutators) {
  test::Gen gen(12);
  for (int trial = 0; trial < 40; ++trial) {
    const SectorLabel c = gen.label(40);
    const SectorShape sh = shape_of(c);
    if (sh.N > 30) continue;
    const double scale = std::pow(std::max(1, sh.N + sh.gamma + sh.delta), 4);
    EXPECT_LE(commutator_check(c), 1e-12 * scale);
    const SectorLadder s = sector_ops(c);
    const Eigen::MatrixXcd AsA = s.Astar.matrix * s.A.matrix;
    for (int n = 0; n <= sh.N; ++n) {
      const double g = double(n) * (sh.N - n + 1) * (sh.gamma + n) * (sh.N - n + sh.delta + 1);
      EXPECT_NEAR(AsA(n, n).real(), g, 1e-9 * std::max(1.0, g));
    }
    EXPECT_LE(max_abs(s.Astar.matrix - s.A.matrix.adjoint()), 0.0);
  }
}

TEST(Quantum, TridiagonalH0Examples) {
  const SymTridiagonal h = tridiagonal_h0(shape_of(two_level(0, 0)));
  EXPECT_EQ(h.diag, (std::vector<double>{1.0, 1.0}));
  EXPECT_EQ(h.off, (std::vector<double>{1.0}));
  const EigenSystem es = oracle_diagonalize(h);
  EXPECT_NEAR(es.values(0), 0.0, 1e-15);
  EXPECT_NEAR(es.values(1), 2.0, 1e-15);
  EXPECT_EQ(tridiagonal_h0(shape_of({0, 0, 0})).diag, std::vector<double>{0.0});
}

TEST(Quantum, ReducedHamiltonianExamples) {
  FourWaveParams p;
  const SectorLabel c = two_level(0, 0);
  const double L = lambda0(c, p);
  const Eigen::MatrixXcd H = reduced_hamiltonian(c, p).matrix;
  EXPECT_NEAR(std::abs(H(0, 0) - (L + 1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(H(1, 1) - (L + 1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(H(0, 1) - 1.0), 0.0, 1e-14);

  FourWaveParams q;
  q.omega = {1.3, 0.4, 0.9, 0.2};
  q.g = 0.0;
  const SectorLabel c2{4, 3, 1};
  const Eigen::MatrixXcd H2 = reduced_hamiltonian(c2, q).matrix;
  const SectorLadder s = sector_ops(c2);
  const Eigen::MatrixXcd expect =
      q.detuning() * s.A0.matrix + lambda0(c2, q) * Eigen::MatrixXcd::Identity(H2.rows(), H2.cols());
  EXPECT_LE(max_abs(H2 - expect), 1e-14);

  EXPECT_NEAR(reduced_hamiltonian(SectorLabel{0, 0, 0}, p).matrix(0, 0).real(), lambda0({0, 0, 0}, p), 0.0);
}

TEST(Quantum, SpectralDecompositionExamples) {
  FourWaveParams p;
  const SectorSpectrum s = spectral_decomposition({2, 3, 0}, p);
  // (2,3,0) has N=2, gamma=0, delta=1: lambda = 0, 3, 8 over lambda0 = 5
  EXPECT_EQ(s.energies, (std::vector<double>{5.0, 8.0, 13.0}));
  // gamma = delta = 0, N = 2: lambda = 0, 2, 6 over lambda0 = 4
  EXPECT_EQ(spectral_decomposition({2, 2, 0}, p).energies, (std::vector<double>{4.0, 6.0, 10.0}));
  p.g = 0.0;
  for (double e : spectral_decomposition({4, 4, 1}, p).energies) EXPECT_DOUBLE_EQ(e, lambda0({4, 4, 1}, p));
  FourWaveParams off;
  off.omega = {1.0, 1.5, 1.0, 1.0};
  EXPECT_THROW(spectral_decomposition({2, 3, 0}, off), Error);
  std::ostringstream out;
  write_spectrum_csv(out, spectral_decomposition({2, 2, 0}, FourWaveParams{}));
  EXPECT_EQ(out.str(), "k,lambda,energy\n0,0,4\n1,2,6\n2,6,10\n");
}

TEST(QuantumProperty, SpectraMatchOracleUpToT8) {
  test::Gen gen(13);
  const FourWaveParams p = gen.resonant(0.8);
  for (const SectorLabel& c : sectors_up_to(8)) {
    const EigenSystem es = oracle_diagonalize(reduced_hamiltonian_tridiagonal(c, p), false);
    const SectorSpectrum sp = spectral_decomposition(c, p);
    std::vector<double> e = sp.energies;
    std::sort(e.begin(), e.end());
    for (std::size_t k = 0; k < e.size(); ++k) EXPECT_NEAR(es.values(Eigen::Index(k)), e[k], 1e-8 * std::max(1.0, e[k]));
  }
}

TEST(Quantum, PropagatorExamples) {
  test::Gen gen(14);
  const FourWaveParams p = gen.resonant();
  const SectorLabel c{4, 3, 1};
  const SectorOperator U0 = propagator(c, p, 0.0);
  EXPECT_LE(max_abs(U0.matrix - Eigen::MatrixXcd::Identity(U0.matrix.rows(), U0.matrix.cols())), 1e-14);
  for (double t : {0.3, 1.1, 4.0}) {
    const SectorOperator U = propagator(two_level(0, 0), p, t);
    EXPECT_NEAR(std::norm(U.matrix(0, 0)), std::pow(std::cos(p.g * p.hbar * t), 2), 1e-13);
  }
  FourWaveParams off = p;
  off.omega[0] += 0.3;
  EXPECT_THROW(propagator(c, off, 1.0), Error);
  const SectorOperator Uo = propagator(c, off, 1.0, true);
  const Eigen::Index d = Uo.matrix.rows();
  EXPECT_LE(max_abs(Uo.matrix * Uo.matrix.adjoint() - Eigen::MatrixXcd::Identity(d, d)), 1e-10);
}

TEST(QuantumProperty, PropagatorUnitaryAndColumnSums) {
  test::Gen gen(15);
  for (int trial = 0; trial < 30; ++trial) {
    const FourWaveParams p = gen.resonant(gen.real(0.3, 1.5));
    const SectorLabel c = gen.label(24);
    const double t = gen.real(-5.0, 5.0);
    const SectorOperator U = propagator(c, p, t);
    const Eigen::Index d = U.matrix.rows();
    EXPECT_LE(max_abs(U.matrix * U.matrix.adjoint() - Eigen::MatrixXcd::Identity(d, d)), 1e-10);
    for (int n = 0; n < d; ++n) {
      double s = 0.0;
      for (int m = 0; m < d; ++m) s += transition_probability(c, p, m, n, t);
      EXPECT_NEAR(s, 1.0, 1e-10);
    }
  }
}

TEST(Quantum, TransitionProbabilityExamples) {
  test::Gen gen(16);
  const FourWaveParams p = gen.resonant();
  for (double t : {0.0, 0.5, 2.0}) {
    const double s = std::sin(p.g * p.hbar * t);
    EXPECT_NEAR(transition_probability(two_level(0, 0), p, 1, 0, t), s * s, 1e-13);
  }
  EXPECT_NEAR(transition_probability({5, 4, 1}, p, 2, 2, 0.0), 1.0, 1e-14);
  EXPECT_THROW(transition_probability({5, 4, 1}, p, 9, 0, 1.0), Error);
}

TEST(QuantumProperty, CosineSumAndGaugeInvariance) {
  test::Gen gen(17);
  for (int trial = 0; trial < 15; ++trial) {
    const FourWaveParams p = gen.resonant();
    const SectorLabel c = gen.label(16);
    const int d = shape_of(c).dim();
    const double t = gen.real(0.0, 6.0);
    const SpectralTable tab = transition_matrix({shape_of(c).gamma, shape_of(c).delta, shape_of(c).N});
    const SectorSpectrum sp = spectral_decomposition(c, p);
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) {
        const double P = transition_probability(c, p, m, n, t);
        EXPECT_NEAR(P, transition_probability_cosine_sum(c, p, m, n, t), 1e-12);
        // unsigned gauge: rows without the (-1)^n factor
        cplx amp = 0.0;
        for (int k = 0; k < d; ++k)
          amp += std::pow(-1.0, m + n) * tab.R(m, k) * tab.R(n, k) * std::polar(1.0, sp.energies[k] * t);
        EXPECT_NEAR(std::norm(amp), P, 1e-12);
      }
  }
}

TEST(Quantum, TwoLevelClosedForm) {
  test::Gen gen(18);
  const FourWaveParams p = gen.resonant();
  const TwoLevel z = two_level_closed_form(2, 1, p, 0.0);
  EXPECT_NEAR(z.p_stay, 1.0, 1e-15);
  EXPECT_NEAR(z.p_flip, 0.0, 1e-15);
  for (int i = 0; i < 200; ++i) {
    const double t = 0.05 * i;
    const double s = std::sin(p.g * p.hbar * t);
    EXPECT_NEAR(two_level_closed_form(0, 0, p, t).p_flip, s * s, 1e-12);
  }
  // gamma = 3, delta = 1: kappa = 2, amplitude 2 kappa / (1 + kappa)^2 = 4/9
  const double t = 0.77;
  const TwoLevel tl = two_level_closed_form(3, 1, p, t);
  const double expect = 4.0 / 9.0 * (1.0 - std::cos(p.g * p.hbar * 6.0 * t));
  EXPECT_NEAR(tl.p_flip, expect, 1e-12);
  const SectorOperator U = propagator(two_level(3, 1), p, t);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) EXPECT_NEAR(std::abs(tl.U(a, b)), std::abs(U.matrix(a, b)), 1e-12);
}

TEST(QuantumProperty, TwoLevelAllSubcases) {
  test::Gen gen(19);
  for (int trial = 0; trial < 20; ++trial) {
    const int ga = gen.integer(0, 6), de = gen.integer(0, 6);
    const FourWaveParams p = gen.resonant();
    const double t = gen.real(0.0, 8.0);
    for (Subcase s : {Subcase::i, Subcase::ii, Subcase::iii, Subcase::iv}) {
      const TwoLevel tl = two_level_closed_form(ga, de, p, t, s);
      const SectorLabel c = label_for_shape(1, ga, de, s);
      EXPECT_NEAR(tl.p_flip, transition_probability(c, p, 1, 0, t), 1e-10);
      EXPECT_NEAR(tl.p_stay + tl.p_flip, 1.0, 1e-14);
    }
  }
}

TEST(Quantum, HeisenbergExamples) {
  test::Gen gen(20);
  const FourWaveParams p = gen.resonant();
  const SectorLabel c{5, 3, 2};
  const Eigen::Index d = shape_of(c).dim();
  const SectorOperator I{c, Eigen::MatrixXcd::Identity(d, d)};
  EXPECT_LE(max_abs(heisenberg_evolve(I, c, p, 2.0).matrix - I.matrix), 1e-13);
  const SectorOperator H = reduced_hamiltonian(c, p);
  EXPECT_LE(max_abs(heisenberg_evolve(H, c, p, 2.0).matrix - H.matrix), 1e-12 * max_abs(H.matrix));
  EXPECT_THROW(heisenberg_evolve(H, {4, 4, 0}, p, 1.0), Error);
}

TEST(QuantumProperty, HeisenbergDerivativeHermiticityTrace) {
  test::Gen gen(21);
  for (int trial = 0; trial < 10; ++trial) {
    const FourWaveParams p = gen.resonant();
    const SectorLabel c = gen.label(12);
    const SectorLadder s = sector_ops(c);
    const SectorOperator F{c, s.A.matrix + s.Astar.matrix + s.A0.matrix * s.A0.matrix};
    const double t = gen.real(0.0, 3.0);
    const double h1 = 1e-3, h2 = 5e-4;
    const Eigen::MatrixXcd H = reduced_hamiltonian(c, p).matrix;
    const Eigen::MatrixXcd Ft = heisenberg_evolve(F, c, p, t).matrix;
    const Eigen::MatrixXcd rhs = cplx(0.0, 1.0) * (H * Ft - Ft * H);
    auto err = [&](double h) {
      return max_abs((heisenberg_evolve(F, c, p, t + h).matrix - heisenberg_evolve(F, c, p, t - h).matrix) / (2 * h) -
                     rhs);
    };
    const double e1 = err(h1), e2 = err(h2);
    if (e1 > 1e-8) {
      EXPECT_NEAR(e1 / e2, 4.0, 0.5);
    }
    EXPECT_LE(max_abs(Ft - Ft.adjoint()), 1e-10 * std::max(1.0, max_abs(Ft)));
    EXPECT_NEAR(std::abs(Ft.trace() - F.matrix.trace()), 0.0, 1e-10 * std::max(1.0, std::abs(F.matrix.trace())));
  }
}

TEST(Quantum, FullHamiltonianStructure) {
  test::Gen gen(22);
  const FourWaveParams p = gen.generic(0.7);
  const TruncatedFockSpace space(6);
  const SparseR H = build_full_hamiltonian(space, p);
  EXPECT_EQ(H.coeff(0, 0), 0.0);
  const Eigen::MatrixXd D(H);
  EXPECT_LE((D - D.transpose()).cwiseAbs().maxCoeff(), 0.0);
  for (int k = 0; k < H.outerSize(); ++k)
    for (SparseR::InnerIterator it(H, k); it; ++it)
      EXPECT_EQ(sector_of_fock(space.state(it.row())).label, sector_of_fock(space.state(it.col())).label);
  EXPECT_THROW(build_full_hamiltonian(13, p), Error);
}

TEST(QuantumProperty, FullBlocksMatchSpectralFormula) {
  test::Gen gen(23);
  const FourWaveParams p = gen.resonant(0.6);
  const TruncatedFockSpace space(8);
  const Eigen::MatrixXd H(build_full_hamiltonian(space, p));
  for (const SectorBlock& b : sector_partition(space)) {
    const Eigen::Index d = Eigen::Index(b.indices.size());
    Eigen::MatrixXd block(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) block(i, j) = H(b.indices[i], b.indices[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block, Eigen::EigenvaluesOnly);
    const std::vector<double> lam = eigenvalues({shape_of(b.label).gamma, shape_of(b.label).delta, shape_of(b.label).N});
    for (Eigen::Index k = 0; k < d; ++k) {
      const double expect = p.hbar * p.hbar * p.g * lam[k] + p.hbar * lambda0(b.label, p);
      EXPECT_NEAR(es.eigenvalues()(k), expect, 1e-8 * std::max(1.0, std::abs(expect)));
    }
  }
}

}  // namespace
}  // namespace fwm
