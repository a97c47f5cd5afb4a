#pragma once

#include <complex>
#include <ostream>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "fwm/dualhahn.hpp"
#include "fwm/fock.hpp"
#include "fwm/sector.hpp"
#include "fwm/tridiagonal.hpp"

namespace fwm {

struct SectorOperator {
  SectorLabel sector;
  Eigen::MatrixXcd matrix;
};

struct SectorLadder {
  SectorOperator A0, A, Astar;
};

SectorLadder sector_ops(const SectorLabel& c);

// Max entry error of [A0,A]+A, [A0,A*]-A*, [A,A*]-(G(A0+1)-G(A0)), hbar scaled out.
double commutator_check(const SectorLabel& c);

SymTridiagonal tridiagonal_h0(const SectorShape& shape);

// Omega*A0 + g*hbar*H0 + lambda0*I, units 1/time.
SymTridiagonal reduced_hamiltonian_tridiagonal(const SectorLabel& c, const FourWaveParams& p);
SectorOperator reduced_hamiltonian(const SectorLabel& c, const FourWaveParams& p);

struct SectorSpectrum {
  std::vector<double> energies;  // g*hbar*lambda_k + lambda0
  SpectralTable table;
};

SectorSpectrum spectral_decomposition(const SectorLabel& c, const FourWaveParams& p);
void write_spectrum_csv(std::ostream& out, const SectorSpectrum& s);  // k,lambda,energy

// exp(i t H_c). Off resonance throws NotResonant unless allow_oracle, which diagonalizes by QL.
SectorOperator propagator(const SectorLabel& c, const FourWaveParams& p, double t, bool allow_oracle = false);

double transition_probability(const SectorLabel& c, const FourWaveParams& p, int m, int n, double t);
// Same probability as a double sum of cosines over the spectrum.
double transition_probability_cosine_sum(const SectorLabel& c, const FourWaveParams& p, int m, int n, double t);

struct TwoLevel {
  Eigen::Matrix2cd U;  // unsigned amplitude gauge
  double p_stay = 1.0;
  double p_flip = 0.0;
};

TwoLevel two_level_closed_form(int gamma, int delta, const FourWaveParams& p, double t,
                               Subcase subcase = Subcase::i);

// F(t) = U F U^dagger with U = exp(i t H_c), so dF/dt = i [H_c, F].
SectorOperator heisenberg_evolve(const SectorOperator& F, const SectorLabel& c, const FourWaveParams& p, double t,
                                 bool allow_oracle = false);

inline constexpr int kMaxOracleT = 12;

std::vector<OperatorTerm> hamiltonian_terms(const FourWaveParams& p);
SparseR build_full_hamiltonian(const TruncatedFockSpace& space, const FourWaveParams& p);
SparseR build_full_hamiltonian(int T, const FourWaveParams& p);

struct SectorBlock {
  SectorLabel label;
  std::vector<std::size_t> indices;  // positions in the truncated basis, by local index
};

// Sector partition of the truncated basis; every state appears exactly once.
std::vector<SectorBlock> sector_partition(const TruncatedFockSpace& space);

}  // namespace fwm
