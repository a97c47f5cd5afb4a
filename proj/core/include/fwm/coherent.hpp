#pragma once

#include <array>
#include <complex>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fwm/classical.hpp"
#include "fwm/fock.hpp"
#include "fwm/sector.hpp"

namespace fwm {

// (m0..m3; n0..n3): the word (a0*)^m0..(a3*)^m3 a0^n0..a3^n3, symbol conj(z)^m z^n.
using MultiIndex = std::array<int, 8>;

class NormalOrderedObservable {
 public:
  using Map = std::map<MultiIndex, cplx>;

  NormalOrderedObservable() = default;
  static NormalOrderedObservable monomial(const MultiIndex& k, cplx coef = 1.0);

  void add(const MultiIndex& k, cplx coef);
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int degree() const;  // max total of m and n
  // Drops coefficients with modulus <= tol.
  NormalOrderedObservable pruned(double tol = 0.0) const;
  NormalOrderedObservable adjoint() const;

  NormalOrderedObservable& operator+=(const NormalOrderedObservable& o);
  friend NormalOrderedObservable operator+(NormalOrderedObservable a, const NormalOrderedObservable& b);
  friend NormalOrderedObservable operator-(NormalOrderedObservable a, const NormalOrderedObservable& b);
  friend NormalOrderedObservable operator*(cplx s, NormalOrderedObservable a);

 private:
  Map terms_;
};

// Largest coefficient modulus of a - b.
double max_coeff_diff(const NormalOrderedObservable& a, const NormalOrderedObservable& b);

// Rewrites arbitrary ladder words into normal order with [a_k, a_k*] = hbar.
NormalOrderedObservable normal_order(const std::vector<OperatorTerm>& terms, double hbar);
std::vector<OperatorTerm> to_words(const NormalOrderedObservable& f);

// sum over j with every j_k <= J of hbar^|j|/j! d_z^j f d_zbar^j g; J < 0 keeps all orders.
NormalOrderedObservable star_product(const NormalOrderedObservable& f, const NormalOrderedObservable& g, double hbar,
                                     int J = -1);
// Terms with |j| = k of the star product, hbar stripped.
NormalOrderedObservable star_component(const NormalOrderedObservable& f, const NormalOrderedObservable& g, int k);
// (-i/hbar)(f*g - g*f) at hbar = 0.
NormalOrderedObservable star_bracket_limit(const NormalOrderedObservable& f, const NormalOrderedObservable& g);
// {f,g} = i sum_k (df/dzbar_k dg/dz_k - df/dz_k dg/dzbar_k)
NormalOrderedObservable poisson_bracket(const NormalOrderedObservable& f, const NormalOrderedObservable& g);

cplx covariant_symbol(const NormalOrderedObservable& F, const ModeState& z);

enum class Generator { I0, I1, I2, I3, x, y };
const char* generator_name(Generator g);
NormalOrderedObservable generator_symbol(Generator g);
// Bracket of two generators from the closed table in (x, y, I0..I3).
double generator_bracket_table(Generator f, Generator g, const ModeState& z);

struct CoherentTable {
  std::vector<cplx> coeffs;  // aligned with the truncated basis
  double norm2 = 0.0;        // truncated sum
  double norm2_exact = 0.0;  // exp(sum |z_k|^2 / hbar)
  double tail = 0.0;         // norm2_exact - norm2
};

CoherentTable coherent_coeffs(const ModeState& z, double hbar, const TruncatedFockSpace& space);
// Untruncated amplitude of one Fock state.
cplx coherent_amplitude(const ModeState& z, const FockState& n, double hbar);

cplx zeta_of(const ModeState& z);
cplx zeta_of_reduced(const ReducedCoords& rc);

// w_n = sqrt(n!(N-n)!(n+gamma)!(N+delta-n)!)
std::vector<double> coherent_weights(const SectorLabel& c);

struct ReducedCoherent {
  cplx zeta;
  SectorLabel sector;
  std::vector<cplx> coeffs;  // zeta^n / w_n
};

ReducedCoherent reduced_coherent(cplx zeta, const SectorLabel& c);

struct Projection {
  cplx alpha;
  double hbar_factor = 1.0;  // hbar^(-(2N+gamma+delta)/2)
  ReducedCoherent reduced;
};

// P_c|z> = alpha * hbar_factor * |zeta; c>, alpha chosen by the subcase of c.
Projection project_coherent(const ModeState& z, const SectorLabel& c, double hbar);
// Sector components of |z> in basis_states(c) order, straight from the coherent coefficients.
std::vector<cplx> sector_restriction(const ModeState& z, const SectorLabel& c, double hbar);

cplx reproducing_kernel(cplx zeta, cplx w, const SectorLabel& c);
// Same kernel through the terminating 2F1(-N, -(N+delta); gamma+1; conj(zeta) w).
cplx reproducing_kernel_hypergeometric(cplx zeta, cplx w, const SectorLabel& c);

// Radial density in s = |zeta|^2. Infinite at s = 0 when gamma = 0.
double measure_density(double s, const SectorLabel& c);

struct MomentRow {
  int n = 0;
  double integral = 0.0;  // 2 pi int s^n density ds
  double target = 0.0;    // w_n^2
  double rel_err = 0.0;
};

std::vector<MomentRow> radial_moments(const SectorLabel& c);
std::string moment_report_json(const SectorLabel& c, const std::vector<MomentRow>& rows);

struct HolomorphicOps {
  Eigen::MatrixXd A0, A, Astar;  // on monomial coefficients of zeta^0..zeta^N
  Eigen::VectorXd weights;
};

// A0 = zeta d/dzeta (+ c3 in subcases iii, iv), A = d/dzeta (gamma + zeta d/dzeta),
// A* = zeta (N - zeta d/dzeta)(N + delta - zeta d/dzeta).
HolomorphicOps holomorphic_ops(const SectorLabel& c);
// Max deviation of W M W^-1 from the sector matrices, W = diag(weights).
double holomorphic_intertwining_error(const SectorLabel& c);

// <z| exp(i t H / hbar) |n> / ||z||. Needs resonance.
cplx fock_coherent_amplitude(const ModeState& z, const FockState& n, double t, const FourWaveParams& p);

void write_amplitude_csv(std::ostream& out, const std::vector<double>& t, const std::vector<cplx>& amp);  // t,re,im,abs

}  // namespace fwm
