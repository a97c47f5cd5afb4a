#include "fwm/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fwm/csv.hpp"
#include "fwm/error.hpp"

namespace fwm {

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// G(n0) for global occupation n0 of mode 0.
double kummer_factor(const SectorLabel& c, double n0) {
  return n0 * (c.c1 - n0 + 1) * (n0 - c.c3) * (c.c2 + c.c3 - n0 + 1);
}

void require_resonance(const FourWaveParams& p) {
  if (!p.resonant())
    throw Error(Errc::NotResonant, "detuning " + format_double(p.detuning()) + " violates the resonance condition");
}

Eigen::MatrixXcd unitary_from(const Eigen::MatrixXd& V, const Eigen::VectorXd& mu, double t) {
  Eigen::VectorXcd phase(mu.size());
  for (Eigen::Index k = 0; k < mu.size(); ++k) phase(k) = std::polar(1.0, mu(k) * t);
  return V.cast<cplx>() * phase.asDiagonal() * V.transpose().cast<cplx>();
}

}  // namespace

SectorLadder sector_ops(const SectorLabel& c) {
  const SectorShape sh = shape_of(c);
  const int N = sh.N, d = sh.dim();
  const double g = sh.gamma, dl = sh.delta;
  SectorLadder ops;
  ops.A0 = {c, Eigen::MatrixXcd::Zero(d, d)};
  ops.A = {c, Eigen::MatrixXcd::Zero(d, d)};
  for (int n = 0; n < d; ++n) ops.A0.matrix(n, n) = double(sh.base_offset + n);
  for (int n = 1; n <= N; ++n) ops.A.matrix(n - 1, n) = std::sqrt(double(n) * (N - n + 1) * (g + n) * (N - n + dl + 1));
  ops.Astar = {c, ops.A.matrix.adjoint()};
  return ops;
}

double commutator_check(const SectorLabel& c) {
  const SectorLadder s = sector_ops(c);
  const auto& A0 = s.A0.matrix;
  const auto& A = s.A.matrix;
  const auto& As = s.Astar.matrix;
  const Eigen::Index d = A0.rows();
  Eigen::MatrixXcd Gdiff = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index n = 0; n < d; ++n) {
    const double n0 = A0(n, n).real();
    Gdiff(n, n) = kummer_factor(c, n0 + 1) - kummer_factor(c, n0);
  }
  const double e1 = max_abs(A0 * A - A * A0 + A);
  const double e2 = max_abs(A0 * As - As * A0 - As);
  const double e3 = max_abs(A * As - As * A - Gdiff);
  return std::max({e1, e2, e3});
}

SymTridiagonal tridiagonal_h0(const SectorShape& shape) {
  return dual_hahn_jacobi({shape.gamma, shape.delta, shape.N});
}

SymTridiagonal reduced_hamiltonian_tridiagonal(const SectorLabel& c, const FourWaveParams& p) {
  const SectorShape sh = shape_of(c);
  SymTridiagonal h = tridiagonal_h0(sh);
  const double gh = p.g * p.hbar, Om = p.detuning(), l0 = lambda0(c, p);
  for (int n = 0; n < sh.dim(); ++n) h.diag[n] = Om * (sh.base_offset + n) + gh * h.diag[n] + l0;
  for (double& b : h.off) b *= gh;
  return h;
}

SectorOperator reduced_hamiltonian(const SectorLabel& c, const FourWaveParams& p) {
  return {c, reduced_hamiltonian_tridiagonal(c, p).dense().cast<cplx>()};
}

SectorSpectrum spectral_decomposition(const SectorLabel& c, const FourWaveParams& p) {
  require_resonance(p);
  const SectorShape sh = shape_of(c);
  SectorSpectrum s;
  s.table = transition_matrix({sh.gamma, sh.delta, sh.N});
  const double gh = p.g * p.hbar, l0 = lambda0(c, p);
  s.energies.reserve(s.table.lambdas.size());
  for (double lam : s.table.lambdas) s.energies.push_back(gh * lam + l0);
  return s;
}

void write_spectrum_csv(std::ostream& out, const SectorSpectrum& s) {
  CsvWriter w(out, {"k", "lambda", "energy"});
  for (std::size_t k = 0; k < s.energies.size(); ++k) w.row({double(k), s.table.lambdas[k], s.energies[k]});
}

SectorOperator propagator(const SectorLabel& c, const FourWaveParams& p, double t, bool allow_oracle) {
  if (p.resonant()) {
    const SectorSpectrum s = spectral_decomposition(c, p);
    const Eigen::VectorXd mu = Eigen::Map<const Eigen::VectorXd>(s.energies.data(), Eigen::Index(s.energies.size()));
    return {c, unitary_from(s.table.R, mu, t)};
  }
  if (!allow_oracle) require_resonance(p);
  const EigenSystem es = oracle_diagonalize(reduced_hamiltonian_tridiagonal(c, p));
  return {c, unitary_from(es.vectors, es.values, t)};
}

double transition_probability(const SectorLabel& c, const FourWaveParams& p, int m, int n, double t) {
  const SectorShape sh = shape_of(c);
  if (m < 0 || n < 0 || m > sh.N || n > sh.N) throw Error(Errc::IndexOutOfRange, "sector index out of range");
  return std::norm(propagator(c, p, t).matrix(m, n));
}

double transition_probability_cosine_sum(const SectorLabel& c, const FourWaveParams& p, int m, int n, double t) {
  const SectorShape sh = shape_of(c);
  if (m < 0 || n < 0 || m > sh.N || n > sh.N) throw Error(Errc::IndexOutOfRange, "sector index out of range");
  const SectorSpectrum s = spectral_decomposition(c, p);
  const double gh = p.g * p.hbar;
  double sum = 0.0;
  for (int k = 0; k <= sh.N; ++k) {
    const double uk = s.table.R(n, k) * s.table.R(m, k);
    sum += uk * uk;
    for (int l = 0; l < k; ++l) {
      const double ul = s.table.R(n, l) * s.table.R(m, l);
      sum += 2.0 * uk * ul * std::cos(gh * (s.table.lambdas[k] - s.table.lambdas[l]) * t);
    }
  }
  return sum;
}

TwoLevel two_level_closed_form(int gamma, int delta, const FourWaveParams& p, double t, Subcase subcase) {
  require_resonance(p);
  const SectorLabel c = label_for_shape(1, gamma, delta, subcase);
  const double gp1 = gamma + 1.0, dp1 = delta + 1.0, l1 = gamma + delta + 2.0;
  const double theta = p.hbar * p.g * l1 * t;
  const cplx e = std::polar(1.0, theta);
  const cplx pre = std::polar(1.0, t * lambda0_for_subcase(c, subcase, p)) / l1;
  const cplx off = pre * std::sqrt(gp1 * dp1) * (1.0 - e);
  TwoLevel out;
  out.U << pre * (dp1 + gp1 * e), off, off, pre * (gp1 + dp1 * e);
  const double kappa = gp1 / dp1;
  out.p_flip = 2.0 * kappa / ((1.0 + kappa) * (1.0 + kappa)) * (1.0 - std::cos(theta));
  out.p_stay = 1.0 - out.p_flip;
  return out;
}

SectorOperator heisenberg_evolve(const SectorOperator& F, const SectorLabel& c, const FourWaveParams& p, double t,
                                 bool allow_oracle) {
  const int d = shape_of(c).dim();
  if (!(F.sector == c) || F.matrix.rows() != d || F.matrix.cols() != d)
    throw Error(Errc::ShapeMismatch, "observable does not live on the requested sector");
  const Eigen::MatrixXcd U = propagator(c, p, t, allow_oracle).matrix;
  return {c, U * F.matrix * U.adjoint()};
}

std::vector<OperatorTerm> hamiltonian_terms(const FourWaveParams& p) {
  const auto& w = p.omega;
  const double g = p.g;
  return {
      {w[0], {cre(0), ann(0)}},
      {w[1], {cre(1), ann(1)}},
      {w[2], {cre(2), ann(2)}},
      {w[3], {cre(3), ann(3)}},
      {g, {cre(0), ann(0), ann(3), cre(3)}},
      {g, {cre(1), ann(1), ann(2), cre(2)}},
      {g, {ann(0), cre(1), ann(2), cre(3)}},
      {g, {cre(0), ann(1), cre(2), ann(3)}},
  };
}

SparseR build_full_hamiltonian(const TruncatedFockSpace& space, const FourWaveParams& p) {
  if (space.max_total_quanta() > kMaxOracleT)
    throw Error(Errc::TruncationTooLarge, "full Hamiltonian limited to T <= " + std::to_string(kMaxOracleT));
  p.validate();
  return assemble(space, hamiltonian_terms(p), p.hbar).real();
}

SparseR build_full_hamiltonian(int T, const FourWaveParams& p) {
  if (T > kMaxOracleT)
    throw Error(Errc::TruncationTooLarge, "full Hamiltonian limited to T <= " + std::to_string(kMaxOracleT));
  return build_full_hamiltonian(TruncatedFockSpace(T), p);
}

std::vector<SectorBlock> sector_partition(const TruncatedFockSpace& space) {
  auto key = [](const SectorLabel& c) { return std::array<int, 3>{c.c1, c.c2, c.c3}; };
  std::map<std::array<int, 3>, SectorBlock> blocks;
  for (const SectorLabel& c : sectors_up_to(space.max_total_quanta())) {
    SectorBlock b{c, {}};
    for (const FockState& s : basis_states(c)) b.indices.push_back(*space.index_of(s));
    blocks.emplace(key(c), std::move(b));
  }
  std::vector<SectorBlock> out;
  out.reserve(blocks.size());
  for (auto& kv : blocks) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace fwm
