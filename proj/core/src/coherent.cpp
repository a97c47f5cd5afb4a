#include "fwm/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <json.hpp>

#include "fwm/csv.hpp"
#include "fwm/error.hpp"
#include "fwm/hypergeometric.hpp"
#include "fwm/parallel.hpp"
#include "fwm/quantum.hpp"

namespace fwm {

namespace {

double falling(int n, int j) {
  double r = 1.0;
  for (int i = 0; i < j; ++i) r *= n - i;
  return r;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

cplx ipow(cplx z, int n) {
  cplx r = 1.0;
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

MultiIndex key_from_word(const LadderWord& w) {
  MultiIndex k{};
  for (const Ladder& l : w) ++k[l.dagger ? l.mode : 4 + l.mode];
  return k;
}

// Visits every j with j_k <= min(n_k, m'_k, cap) and calls body(j, |j|).
template <class Body>
void for_each_contraction(const MultiIndex& a, const MultiIndex& b, int cap, Body&& body) {
  std::array<int, 4> lim{};
  for (int k = 0; k < 4; ++k) {
    lim[k] = std::min(a[4 + k], b[k]);
    if (cap >= 0) lim[k] = std::min(lim[k], cap);
  }
  std::array<int, 4> j{};
  for (j[0] = 0; j[0] <= lim[0]; ++j[0])
    for (j[1] = 0; j[1] <= lim[1]; ++j[1])
      for (j[2] = 0; j[2] <= lim[2]; ++j[2])
        for (j[3] = 0; j[3] <= lim[3]; ++j[3]) body(j, j[0] + j[1] + j[2] + j[3]);
}

void add_contraction(NormalOrderedObservable& out, const MultiIndex& a, cplx ca, const MultiIndex& b, cplx cb,
                     const std::array<int, 4>& j, double scale) {
  MultiIndex k{};
  double w = scale;
  for (int m = 0; m < 4; ++m) {
    k[m] = a[m] + b[m] - j[m];
    k[4 + m] = a[4 + m] + b[4 + m] - j[m];
    w *= falling(a[4 + m], j[m]) * falling(b[m], j[m]) / factorial(j[m]);
  }
  out.add(k, w * ca * cb);
}

NormalOrderedObservable derivative(const NormalOrderedObservable& f, int slot) {
  NormalOrderedObservable d;
  for (const auto& [k, c] : f.terms()) {
    if (k[slot] == 0) continue;
    MultiIndex kk = k;
    --kk[slot];
    d.add(kk, double(k[slot]) * c);
  }
  return d;
}

NormalOrderedObservable multiply(const NormalOrderedObservable& f, const NormalOrderedObservable& g) {
  return star_component(f, g, 0);
}

}  // namespace

NormalOrderedObservable NormalOrderedObservable::monomial(const MultiIndex& k, cplx coef) {
  NormalOrderedObservable f;
  f.add(k, coef);
  return f;
}

void NormalOrderedObservable::add(const MultiIndex& k, cplx coef) {
  for (int v : k)
    if (v < 0) throw Error(Errc::IndexOutOfRange, "negative power in a normal-ordered monomial");
  terms_[k] += coef;
}

int NormalOrderedObservable::degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int v : k) s += v;
    d = std::max(d, s);
  }
  return d;
}

NormalOrderedObservable NormalOrderedObservable::pruned(double tol) const {
  NormalOrderedObservable f;
  for (const auto& [k, c] : terms_)
    if (std::abs(c) > tol) f.terms_[k] = c;
  return f;
}

NormalOrderedObservable NormalOrderedObservable::adjoint() const {
  NormalOrderedObservable f;
  for (const auto& [k, c] : terms_) {
    MultiIndex s{};
    for (int m = 0; m < 4; ++m) s[m] = k[4 + m], s[4 + m] = k[m];
    f.terms_[s] += std::conj(c);
  }
  return f;
}

NormalOrderedObservable& NormalOrderedObservable::operator+=(const NormalOrderedObservable& o) {
  for (const auto& [k, c] : o.terms_) terms_[k] += c;
  return *this;
}

NormalOrderedObservable operator+(NormalOrderedObservable a, const NormalOrderedObservable& b) { return a += b; }

NormalOrderedObservable operator-(NormalOrderedObservable a, const NormalOrderedObservable& b) {
  return a += cplx(-1.0) * b;
}

NormalOrderedObservable operator*(cplx s, NormalOrderedObservable a) {
  for (auto& [k, c] : a.terms_) c *= s;
  return a;
}

double max_coeff_diff(const NormalOrderedObservable& a, const NormalOrderedObservable& b) {
  double m = 0.0;
  const NormalOrderedObservable d = a - b;
  for (const auto& [k, c] : d.terms()) m = std::max(m, std::abs(c));
  return m;
}

NormalOrderedObservable normal_order(const std::vector<OperatorTerm>& terms, double hbar) {
  NormalOrderedObservable out;
  std::deque<OperatorTerm> work(terms.begin(), terms.end());
  while (!work.empty()) {
    OperatorTerm t = std::move(work.front());
    work.pop_front();
    std::size_t i = 0;
    while (i + 1 < t.word.size() && !(!t.word[i].dagger && t.word[i + 1].dagger)) ++i;
    if (i + 1 >= t.word.size()) {
      out.add(key_from_word(t.word), t.coef);
      continue;
    }
    const Ladder a = t.word[i], b = t.word[i + 1];
    OperatorTerm swapped = t;
    std::swap(swapped.word[i], swapped.word[i + 1]);
    work.push_back(std::move(swapped));
    if (a.mode == b.mode) {
      OperatorTerm contracted{t.coef * hbar, {}};
      contracted.word.reserve(t.word.size() - 2);
      for (std::size_t k = 0; k < t.word.size(); ++k)
        if (k != i && k != i + 1) contracted.word.push_back(t.word[k]);
      work.push_back(std::move(contracted));
    }
  }
  return out;
}

std::vector<OperatorTerm> to_words(const NormalOrderedObservable& f) {
  std::vector<OperatorTerm> out;
  for (const auto& [k, c] : f.terms()) {
    OperatorTerm t{c, {}};
    for (int m = 0; m < 4; ++m)
      for (int r = 0; r < k[m]; ++r) t.word.push_back(cre(m));
    for (int m = 0; m < 4; ++m)
      for (int r = 0; r < k[4 + m]; ++r) t.word.push_back(ann(m));
    out.push_back(std::move(t));
  }
  return out;
}

NormalOrderedObservable star_product(const NormalOrderedObservable& f, const NormalOrderedObservable& g, double hbar,
                                     int J) {
  NormalOrderedObservable out;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms())
      for_each_contraction(a, b, J, [&](const std::array<int, 4>& j, int total) {
        add_contraction(out, a, ca, b, cb, j, std::pow(hbar, total));
      });
  return out;
}

NormalOrderedObservable star_component(const NormalOrderedObservable& f, const NormalOrderedObservable& g, int k) {
  NormalOrderedObservable out;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms())
      for_each_contraction(a, b, k, [&](const std::array<int, 4>& j, int total) {
        if (total == k) add_contraction(out, a, ca, b, cb, j, 1.0);
      });
  return out;
}

NormalOrderedObservable star_bracket_limit(const NormalOrderedObservable& f, const NormalOrderedObservable& g) {
  return cplx(0.0, -1.0) * (star_component(f, g, 1) - star_component(g, f, 1));
}

NormalOrderedObservable poisson_bracket(const NormalOrderedObservable& f, const NormalOrderedObservable& g) {
  NormalOrderedObservable out;
  for (int m = 0; m < 4; ++m) {
    out += multiply(derivative(f, m), derivative(g, 4 + m));
    out += cplx(-1.0) * multiply(derivative(f, 4 + m), derivative(g, m));
  }
  return cplx(0.0, 1.0) * out;
}

cplx covariant_symbol(const NormalOrderedObservable& F, const ModeState& z) {
  cplx s = 0.0;
  for (const auto& [k, c] : F.terms()) {
    cplx v = c;
    for (int m = 0; m < 4; ++m) v *= ipow(std::conj(z.z[m]), k[m]) * ipow(z.z[m], k[4 + m]);
    s += v;
  }
  return s;
}

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::I0: return "I0";
    case Generator::I1: return "I1";
    case Generator::I2: return "I2";
    case Generator::I3: return "I3";
    case Generator::x: return "x";
    case Generator::y: return "y";
  }
  return "?";
}

NormalOrderedObservable generator_symbol(Generator g) {
  auto number = [](int m) {
    MultiIndex k{};
    k[m] = 1, k[4 + m] = 1;
    return NormalOrderedObservable::monomial(k);
  };
  const MultiIndex X{0, 1, 0, 1, 1, 0, 1, 0};
  const MultiIndex Xbar{1, 0, 1, 0, 0, 1, 0, 1};
  switch (g) {
    case Generator::I0: return number(0);
    case Generator::I1: return number(0) + number(1);
    case Generator::I2: return number(2) + number(3);
    case Generator::I3: return number(0) - number(2);
    case Generator::x:
      return NormalOrderedObservable::monomial(X, 0.5) + NormalOrderedObservable::monomial(Xbar, 0.5);
    case Generator::y:
      return NormalOrderedObservable::monomial(X, cplx(0.0, -0.5)) +
             NormalOrderedObservable::monomial(Xbar, cplx(0.0, 0.5));
  }
  return {};
}

double generator_bracket_table(Generator f, Generator g, const ModeState& z) {
  const auto rank = [](Generator v) {
    if (v == Generator::I0) return 0;
    if (v == Generator::x) return 1;
    if (v == Generator::y) return 2;
    return -1;
  };
  const int a = rank(f), b = rank(g);
  if (a < 0 || b < 0 || a == b) return 0.0;
  if (a > b) return -generator_bracket_table(g, f, z);
  const cplx X = z.z[0] * std::conj(z.z[1]) * z.z[2] * std::conj(z.z[3]);
  const double n0 = std::norm(z.z[0]), n1 = std::norm(z.z[1]), n2 = std::norm(z.z[2]), n3 = std::norm(z.z[3]);
  if (a == 0 && b == 1) return -X.imag();
  if (a == 0 && b == 2) return X.real();
  const FrozenActions bb{n0 + n1, n2 + n3, n0 - n2};
  return 0.5 * g0_prime(n0, bb);
}

cplx coherent_amplitude(const ModeState& z, const FockState& n, double hbar) {
  cplx v = 1.0;
  for (int m = 0; m < 4; ++m)
    for (int j = 1; j <= n[m]; ++j) v *= z.z[m] / std::sqrt(hbar * j);
  return v;
}

CoherentTable coherent_coeffs(const ModeState& z, double hbar, const TruncatedFockSpace& space) {
  if (!(hbar > 0.0)) throw Error(Errc::ConfigError, "hbar must be positive");
  CoherentTable t;
  t.coeffs.reserve(space.size());
  for (const FockState& n : space.basis()) {
    t.coeffs.push_back(coherent_amplitude(z, n, hbar));
    t.norm2 += std::norm(t.coeffs.back());
  }
  double S = 0.0;
  for (const cplx& v : z.z) S += std::norm(v);
  t.norm2_exact = std::exp(S / hbar);
  t.tail = std::max(0.0, t.norm2_exact - t.norm2);
  return t;
}

cplx zeta_of(const ModeState& z) {
  const cplx den = z.z[1] * z.z[3];
  if (den == cplx(0.0)) throw Error(Errc::DivisionByZero, "zeta needs z1 z3 != 0");
  return z.z[0] * z.z[2] / den;
}

cplx zeta_of_reduced(const ReducedCoords& rc) {
  const FrozenActions& b = rc.b;
  const double f1 = rc.I0, f2 = b.b1 - rc.I0, f3 = rc.I0 - b.b3, f4 = b.b2 + b.b3 - rc.I0;
  if (!(f1 > 0.0 && f2 > 0.0 && f3 > 0.0 && f4 > 0.0))
    throw Error(Errc::OutOfInterval, "reduced zeta needs I0 strictly inside the admissible interval");
  return std::polar(std::sqrt(f1 * f3 / (f2 * f4)), rc.psi0);
}

std::vector<double> coherent_weights(const SectorLabel& c) {
  const SectorShape sh = shape_of(c);
  std::vector<double> w(sh.dim());
  for (int n = 0; n <= sh.N; ++n)
    w[n] = std::sqrt(factorial(n) * factorial(sh.N - n) * factorial(n + sh.gamma) * factorial(sh.N + sh.delta - n));
  return w;
}

ReducedCoherent reduced_coherent(cplx zeta, const SectorLabel& c) {
  const std::vector<double> w = coherent_weights(c);
  ReducedCoherent r{zeta, c, {}};
  r.coeffs.resize(w.size());
  cplx p = 1.0;
  for (std::size_t n = 0; n < w.size(); ++n, p *= zeta) r.coeffs[n] = p / w[n];
  return r;
}

Projection project_coherent(const ModeState& z, const SectorLabel& c, double hbar) {
  if (!(hbar > 0.0)) throw Error(Errc::ConfigError, "hbar must be positive");
  const SectorShape sh = shape_of(c);
  const int N = sh.N, ga = sh.gamma, de = sh.delta;
  const auto& v = z.z;
  cplx zeta = 0.0;
  if (N > 0)
    zeta = zeta_of(z);
  else if (v[1] * v[3] != cplx(0.0))
    zeta = zeta_of(z);
  Projection pr;
  switch (sh.subcase) {
    case Subcase::i: pr.alpha = ipow(v[1], N) * ipow(v[2], ga) * ipow(v[3], N + de); break;
    case Subcase::ii: pr.alpha = ipow(v[1], N + de) * ipow(v[2], ga) * ipow(v[3], N); break;
    case Subcase::iii: pr.alpha = ipow(v[0], ga) * ipow(v[1], N) * ipow(v[3], N + de); break;
    case Subcase::iv: pr.alpha = ipow(v[0], ga) * ipow(v[1], N + de) * ipow(v[3], N); break;
  }
  pr.hbar_factor = std::pow(hbar, -0.5 * (2 * N + ga + de));
  pr.reduced = reduced_coherent(zeta, c);
  return pr;
}

std::vector<cplx> sector_restriction(const ModeState& z, const SectorLabel& c, double hbar) {
  std::vector<cplx> out;
  for (const FockState& n : basis_states(c)) out.push_back(coherent_amplitude(z, n, hbar));
  return out;
}

cplx reproducing_kernel(cplx zeta, cplx w, const SectorLabel& c) {
  const std::vector<double> wt = coherent_weights(c);
  const cplx u = std::conj(zeta) * w;
  cplx s = 0.0, p = 1.0;
  for (std::size_t n = 0; n < wt.size(); ++n, p *= u) s += p / (wt[n] * wt[n]);
  return s;
}

cplx reproducing_kernel_hypergeometric(cplx zeta, cplx w, const SectorLabel& c) {
  const SectorShape sh = shape_of(c);
  const double norm = factorial(sh.N) * factorial(sh.N + sh.delta) * factorial(sh.gamma);
  return hyp2f1_terminating(sh.N, -double(sh.N + sh.delta), sh.gamma + 1.0, std::conj(zeta) * w) / norm;
}

double measure_density(double s, const SectorLabel& c) {
  if (!(s >= 0.0)) throw Error(Errc::OutOfInterval, "measure density needs s >= 0");
  const SectorShape sh = shape_of(c);
  const double N = sh.N, ga = sh.gamma, de = sh.delta;
  const double a = N + de + 2.0, b = N + 2.0, cc = 2.0 * N + de + ga + 4.0;
  const double log_pref = std::lgamma(N + 2.0) + std::lgamma(N + ga + 2.0) + std::lgamma(N + de + 2.0) +
                          std::lgamma(N + de + ga + 2.0) - std::log(2.0 * std::numbers::pi) - std::lgamma(cc);
  if (s == 0.0) {
    if (sh.gamma == 0) return std::numeric_limits<double>::infinity();
    // Gauss summation at argument 1
    return std::exp(log_pref + std::lgamma(cc) + std::lgamma(cc - a - b) - std::lgamma(cc - a) - std::lgamma(cc - b));
  }
  return std::exp(log_pref) * hyp2f1_one_minus(a, b, cc, s);
}

std::vector<MomentRow> radial_moments(const SectorLabel& c) {
  const SectorShape sh = shape_of(c);
  const std::vector<double> w = coherent_weights(c);
  std::vector<MomentRow> rows(sh.dim());
  parallel_for(rows.size(), [&](std::size_t i) {
    const int n = int(i);
    boost::math::quadrature::tanh_sinh<double> integrator;
    // [0,1] directly, [1,inf) through s = 1/u
    auto inner = [&](double s) { return std::pow(s, n) * measure_density(s, c); };
    auto outer = [&](double u) {
      if (u < 1e-20) return 0.0;
      return std::pow(u, -n - 2) * measure_density(1.0 / u, c);
    };
    const double I = integrator.integrate(inner, 0.0, 1.0, 1e-9) + integrator.integrate(outer, 0.0, 1.0, 1e-9);
    MomentRow r;
    r.n = n;
    r.integral = 2.0 * std::numbers::pi * I;
    r.target = w[i] * w[i];
    r.rel_err = std::abs(r.integral - r.target) / r.target;
    rows[i] = r;
  });
  return rows;
}

std::string moment_report_json(const SectorLabel& c, const std::vector<MomentRow>& rows) {
  nlohmann::ordered_json j;
  j["c1"] = c.c1;
  j["c2"] = c.c2;
  j["c3"] = c.c3;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  double worst = 0.0;
  for (const MomentRow& r : rows) {
    arr.push_back({{"n", r.n}, {"integral", r.integral}, {"target", r.target}, {"rel_err", r.rel_err}});
    worst = std::max(worst, r.rel_err);
  }
  j["moments"] = arr;
  j["max_rel_err"] = worst;
  return j.dump(2);
}

HolomorphicOps holomorphic_ops(const SectorLabel& c) {
  if (!validate_label(c)) throw Error(Errc::InvalidLabel, "sector label outside the cone");
  const SectorShape sh = shape_of(c);
  const int N = sh.N, d = sh.dim();
  const double ga = sh.gamma, de = sh.delta;
  HolomorphicOps h;
  h.A0 = Eigen::MatrixXd::Zero(d, d);
  h.A = Eigen::MatrixXd::Zero(d, d);
  h.Astar = Eigen::MatrixXd::Zero(d, d);
  for (int n = 0; n <= N; ++n) {
    h.A0(n, n) = n + sh.base_offset;
    if (n > 0) h.A(n - 1, n) = n * (ga + n);
    if (n < N) h.Astar(n + 1, n) = (N - n) * (N + de - n);
  }
  const std::vector<double> w = coherent_weights(c);
  h.weights = Eigen::Map<const Eigen::VectorXd>(w.data(), d);
  return h;
}

double holomorphic_intertwining_error(const SectorLabel& c) {
  const HolomorphicOps h = holomorphic_ops(c);
  const SectorLadder s = sector_ops(c);
  const Eigen::MatrixXd W = h.weights.asDiagonal();
  const Eigen::MatrixXd Wi = h.weights.cwiseInverse().asDiagonal();
  const auto err = [&](const Eigen::MatrixXd& M, const Eigen::MatrixXcd& S) {
    const Eigen::MatrixXd R = W * M * Wi;
    double scale = std::max(1.0, S.cwiseAbs().maxCoeff());
    return (R.cast<cplx>() - S).cwiseAbs().maxCoeff() / scale;
  };
  return std::max({err(h.A0, s.A0.matrix), err(h.A, s.A.matrix), err(h.Astar, s.Astar.matrix)});
}

cplx fock_coherent_amplitude(const ModeState& z, const FockState& n, double t, const FourWaveParams& p) {
  p.validate();
  const SectorLocation loc = sector_of_fock(n);
  const SectorOperator U = propagator(loc.label, p, t);
  std::vector<cplx> bra;
  if (z.z[1] * z.z[3] != cplx(0.0)) {
    const Projection pr = project_coherent(z, loc.label, p.hbar);
    for (const cplx& v : pr.reduced.coeffs) bra.push_back(pr.alpha * pr.hbar_factor * v);
  } else {
    bra = sector_restriction(z, loc.label, p.hbar);
  }
  double S = 0.0;
  for (const cplx& v : z.z) S += std::norm(v);
  cplx amp = 0.0;
  for (std::size_t m = 0; m < bra.size(); ++m) amp += std::conj(bra[m]) * U.matrix(Eigen::Index(m), Eigen::Index(loc.index));
  return amp * std::exp(-0.5 * S / p.hbar);
}

void write_amplitude_csv(std::ostream& out, const std::vector<double>& t, const std::vector<cplx>& amp) {
  if (t.size() != amp.size()) throw Error(Errc::ShapeMismatch, "time grid and amplitude lengths differ");
  CsvWriter w(out, {"t", "re", "im", "abs"});
  for (std::size_t i = 0; i < t.size(); ++i) w.row({t[i], amp[i].real(), amp[i].imag(), std::abs(amp[i])});
}

}  // namespace fwm
