#include "fwm/spinrep.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "fwm/error.hpp"
#include "fwm/quantum.hpp"

namespace fwm {

namespace {

const cplx kI(0.0, 1.0);

SparseC op(const TruncatedFockSpace& space, double hbar, const std::vector<OperatorTerm>& terms) {
  return assemble(space, terms, hbar);
}

SparseC comm(const SparseC& a, const SparseC& b) { return SparseC(a * b - b * a); }

SparseC number(const TruncatedFockSpace& space, double hbar, int k) { return op(space, hbar, {{1.0, {cre(k), ann(k)}}}); }

SparseC identity(Eigen::Index n) {
  SparseC I(n, n);
  I.setIdentity();
  return I;
}

SparseC interaction_free(const SpinOperators& s, const FourWaveParams& p) {
  const double w0 = p.omega[0], w1 = p.omega[1];
  return SparseC((w0 + w1 + 2.0 * p.g * p.hbar) * s.L + (w1 - w0) * s.M3);
}

}  // namespace

double max_abs(const SparseC& m) {
  double r = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SparseC::InnerIterator it(m, k); it; ++it) r = std::max(r, std::abs(it.value()));
  return r;
}

SpinOperators build_spin_ops(int T, double hbar) {
  if (T > kMaxOracleT) throw Error(Errc::TruncationTooLarge, "spin operators need T <= 12");
  if (!(hbar > 0.0)) throw Error(Errc::ConfigError, "hbar must be positive");
  const TruncatedFockSpace space(T);
  SpinOperators s;
  s.T = T;
  s.hbar = hbar;
  const SparseC n0 = number(space, hbar, 0), n1 = number(space, hbar, 1);
  const SparseC n2 = number(space, hbar, 2), n3 = number(space, hbar, 3);
  s.L = 0.5 * (n0 + n1);
  s.M3 = 0.5 * (n1 - n0);
  s.Mplus = op(space, hbar, {{1.0, {ann(0), cre(1)}}});
  s.Mminus = op(space, hbar, {{1.0, {cre(0), ann(1)}}});
  s.M1 = 0.5 * (s.Mplus + s.Mminus);
  s.M2 = (-0.5 * kI) * (s.Mplus - s.Mminus);
  s.R = 0.5 * (n2 + n3);
  s.S3 = 0.5 * (n2 - n3);
  s.Splus = op(space, hbar, {{1.0, {cre(2), ann(3)}}});
  s.Sminus = op(space, hbar, {{1.0, {ann(2), cre(3)}}});
  s.S1 = 0.5 * (s.Splus + s.Sminus);
  s.S2 = (-0.5 * kI) * (s.Splus - s.Sminus);
  return s;
}

SparseC h_dicke(const SpinOperators& s, const FourWaveParams& p) {
  p.validate();
  const TruncatedFockSpace space(s.T);
  const SparseC n2 = number(space, s.hbar, 2), n3 = number(space, s.hbar, 3);
  const SparseC a2a3s = op(space, s.hbar, {{1.0, {ann(2), cre(3)}}});
  const SparseC a2sa3 = op(space, s.hbar, {{1.0, {cre(2), ann(3)}}});
  const SparseC inter = SparseC((n2 + n3) * s.L) + SparseC((n2 - n3) * s.M3) + SparseC(a2a3s * s.Mplus) +
                        SparseC(a2sa3 * s.Mminus);
  return SparseC(interaction_free(s, p) + p.omega[2] * n2 + p.omega[3] * n3 + p.g * inter);
}

SparseC h_ms(const SpinOperators& s, const FourWaveParams& p) {
  p.validate();
  const double w2 = p.omega[2], w3 = p.omega[3];
  const SparseC inter = 2.0 * SparseC(s.L * s.R) + 2.0 * SparseC(s.M3 * s.S3) + SparseC(s.Mplus * s.Sminus) +
                        SparseC(s.Mminus * s.Splus);
  return SparseC(interaction_free(s, p) + (w2 + w3) * s.R + (w2 - w3) * s.S3 + p.g * inter);
}

std::vector<AuditRow> so4_audit(const SpinOperators& s) {
  const cplx ih = kI * s.hbar;
  std::vector<AuditRow> rows;
  auto add = [&](std::string name, const SparseC& m) { rows.push_back({std::move(name), max_abs(m)}); };
  const std::array<const SparseC*, 3> M{&s.M1, &s.M2, &s.M3};
  const std::array<const SparseC*, 3> S{&s.S1, &s.S2, &s.S3};
  for (int k = 0; k < 3; ++k) {
    const int l = (k + 1) % 3, m = (k + 2) % 3;
    const std::string kl = std::to_string(k + 1) + std::to_string(l + 1);
    add("[M" + kl.substr(0, 1) + ",M" + kl.substr(1) + "]-ihM" + std::to_string(m + 1),
        SparseC(comm(*M[k], *M[l]) - ih * *M[m]));
    add("[S" + kl.substr(0, 1) + ",S" + kl.substr(1) + "]-ihS" + std::to_string(m + 1),
        SparseC(comm(*S[k], *S[l]) - ih * *S[m]));
  }
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      add("[M" + std::to_string(k + 1) + ",S" + std::to_string(l + 1) + "]", comm(*M[k], *S[l]));
  for (int k = 0; k < 3; ++k) {
    const std::string i = std::to_string(k + 1);
    add("[L,M" + i + "]", comm(s.L, *M[k]));
    add("[L,S" + i + "]", comm(s.L, *S[k]));
    add("[R,M" + i + "]", comm(s.R, *M[k]));
    add("[R,S" + i + "]", comm(s.R, *S[k]));
  }
  add("[R,L]", comm(s.R, s.L));
  const SparseC I = identity(s.L.rows());
  const SparseC M2 = SparseC(s.M1 * s.M1) + SparseC(s.M2 * s.M2) + SparseC(s.M3 * s.M3);
  const SparseC S2 = SparseC(s.S1 * s.S1) + SparseC(s.S2 * s.S2) + SparseC(s.S3 * s.S3);
  add("M^2-L(L+h)", SparseC(M2 - s.L * (s.L + s.hbar * I)));
  add("S^2-R(R+h)", SparseC(S2 - s.R * (s.R + s.hbar * I)));
  add("M+-(M1+iM2)", SparseC(s.Mplus - (s.M1 + kI * s.M2)));
  add("S+-(S1+iS2)", SparseC(s.Splus - (s.S1 + kI * s.S2)));
  add("M--adj(M+)", SparseC(s.Mminus - SparseC(s.Mplus.adjoint())));
  add("S--adj(S+)", SparseC(s.Sminus - SparseC(s.Splus.adjoint())));
  return rows;
}

std::vector<AuditRow> conservation_audit(const SpinOperators& s, const FourWaveParams& p) {
  const SparseC H = h_ms(s, p);
  return {{"[H_MS,L]", max_abs(comm(H, s.L))},
          {"[H_MS,R]", max_abs(comm(H, s.R))},
          {"[H_MS,M3+S3]", max_abs(comm(H, SparseC(s.M3 + s.S3)))}};
}

std::string audit_json(const std::vector<AuditRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  double worst = 0.0;
  for (const AuditRow& r : rows) {
    arr.push_back({{"relation", r.relation}, {"deviation", r.deviation}});
    worst = std::max(worst, r.deviation);
  }
  nlohmann::ordered_json j;
  j["relations"] = arr;
  j["max_deviation"] = worst;
  return j.dump(2);
}

ClassicalSpin classical_spin_functions(const ModeState& z) {
  const auto& v = z.z;
  const double n0 = std::norm(v[0]), n1 = std::norm(v[1]), n2 = std::norm(v[2]), n3 = std::norm(v[3]);
  const cplx Mp = v[0] * std::conj(v[1]);
  const cplx Sp = std::conj(v[2]) * v[3];
  ClassicalSpin c;
  c.L = 0.5 * (n0 + n1);
  c.M1 = Mp.real();
  c.M2 = Mp.imag();
  c.M3 = 0.5 * (n1 - n0);
  c.R = 0.5 * (n2 + n3);
  c.S1 = Sp.real();
  c.S2 = Sp.imag();
  c.S3 = 0.5 * (n2 - n3);
  return c;
}

const char* spin_component_name(SpinComponent c) {
  switch (c) {
    case SpinComponent::L: return "L";
    case SpinComponent::M1: return "M1";
    case SpinComponent::M2: return "M2";
    case SpinComponent::M3: return "M3";
    case SpinComponent::R: return "R";
    case SpinComponent::S1: return "S1";
    case SpinComponent::S2: return "S2";
    case SpinComponent::S3: return "S3";
  }
  return "?";
}

NormalOrderedObservable spin_symbol(SpinComponent c) {
  auto word = [](std::initializer_list<Ladder> w) { return LadderWord(w); };
  std::vector<OperatorTerm> t;
  switch (c) {
    case SpinComponent::L: t = {{0.5, word({cre(0), ann(0)})}, {0.5, word({cre(1), ann(1)})}}; break;
    case SpinComponent::M3: t = {{0.5, word({cre(1), ann(1)})}, {-0.5, word({cre(0), ann(0)})}}; break;
    case SpinComponent::M1: t = {{0.5, word({cre(1), ann(0)})}, {0.5, word({cre(0), ann(1)})}}; break;
    case SpinComponent::M2: t = {{-0.5 * kI, word({cre(1), ann(0)})}, {0.5 * kI, word({cre(0), ann(1)})}}; break;
    case SpinComponent::R: t = {{0.5, word({cre(2), ann(2)})}, {0.5, word({cre(3), ann(3)})}}; break;
    case SpinComponent::S3: t = {{0.5, word({cre(2), ann(2)})}, {-0.5, word({cre(3), ann(3)})}}; break;
    case SpinComponent::S1: t = {{0.5, word({cre(2), ann(3)})}, {0.5, word({cre(3), ann(2)})}}; break;
    case SpinComponent::S2: t = {{-0.5 * kI, word({cre(2), ann(3)})}, {0.5 * kI, word({cre(3), ann(2)})}}; break;
  }
  return normal_order(t, 1.0);
}

}  // namespace fwm
