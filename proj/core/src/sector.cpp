#include "fwm/sector.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "fwm/error.hpp"

namespace fwm {

double FourWaveParams::detuning() const { return omega[0] - omega[1] + omega[2] - omega[3]; }

bool FourWaveParams::resonant() const {
  double scale = 0.0;
  for (double w : omega) scale = std::max(scale, std::abs(w));
  return std::abs(detuning()) <= 1e-12 * scale;
}

void FourWaveParams::validate() const {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw Error(Errc::ConfigError, "hbar must be positive");
  for (double w : omega)
    if (!std::isfinite(w)) throw Error(Errc::ConfigError, "non-finite frequency");
  if (!std::isfinite(g)) throw Error(Errc::ConfigError, "non-finite coupling");
}

const char* subcase_name(Subcase s) {
  switch (s) {
    case Subcase::i: return "i";
    case Subcase::ii: return "ii";
    case Subcase::iii: return "iii";
    case Subcase::iv: return "iv";
  }
  return "?";
}

bool validate_label(const SectorLabel& c) {
  return c.c1 >= 0 && c.c2 >= 0 && c.c1 - c.c3 >= 0 && c.c2 + c.c3 >= 0;
}

static void require_label(const SectorLabel& c) {
  if (!validate_label(c))
    throw Error(Errc::InvalidLabel, "label (" + std::to_string(c.c1) + "," + std::to_string(c.c2) +
                                        "," + std::to_string(c.c3) + ") lies outside the cone");
}

std::vector<Subcase> applicable_subcases(const SectorLabel& c) {
  require_label(c);
  std::vector<Subcase> out;
  const bool low = c.c1 <= c.c2 + c.c3;
  const bool high = c.c2 + c.c3 <= c.c1;
  if (c.c3 <= 0 && low) out.push_back(Subcase::i);
  if (c.c3 <= 0 && high) out.push_back(Subcase::ii);
  if (c.c3 >= 0 && low) out.push_back(Subcase::iii);
  if (c.c3 >= 0 && high) out.push_back(Subcase::iv);
  return out;
}

SectorShape shape_for_subcase(const SectorLabel& c, Subcase s) {
  require_label(c);
  SectorShape sh;
  sh.label = c;
  sh.subcase = s;
  switch (s) {
    case Subcase::i:
      sh.N = c.c1, sh.gamma = -c.c3, sh.delta = c.c2 + c.c3 - c.c1, sh.base_offset = 0;
      break;
    case Subcase::ii:
      sh.N = c.c2 + c.c3, sh.gamma = -c.c3, sh.delta = c.c1 - c.c2 - c.c3, sh.base_offset = 0;
      break;
    case Subcase::iii:
      sh.N = c.c1 - c.c3, sh.gamma = c.c3, sh.delta = c.c2 + c.c3 - c.c1, sh.base_offset = c.c3;
      break;
    case Subcase::iv:
      sh.N = c.c2, sh.gamma = c.c3, sh.delta = c.c1 - c.c2 - c.c3, sh.base_offset = c.c3;
      break;
  }
  if (sh.N < 0 || sh.gamma < 0 || sh.delta < 0)
    throw Error(Errc::InvalidLabel, std::string("subcase ") + subcase_name(s) + " does not apply");
  return sh;
}

SectorLabel label_for_shape(int N, int gamma, int delta, Subcase s) {
  if (N < 0 || gamma < 0 || delta < 0) throw Error(Errc::InvalidLabel, "shape parameters must be nonnegative");
  switch (s) {
    case Subcase::i: return {N, N + gamma + delta, -gamma};
    case Subcase::ii: return {N + delta, N + gamma, -gamma};
    case Subcase::iii: return {N + gamma, N + delta, gamma};
    case Subcase::iv: return {N + gamma + delta, N, gamma};
  }
  return {};
}

SectorShape shape_of(const SectorLabel& c) { return shape_for_subcase(c, applicable_subcases(c).front()); }

double lambda0_for_subcase(const SectorLabel& c, Subcase s, const FourWaveParams& p) {
  shape_for_subcase(c, s);
  const auto& w = p.omega;
  const double gh = p.g * p.hbar;
  const double c1 = c.c1, c2 = c.c2, c3 = c.c3;
  double v = w[1] * c1 + w[3] * c2 + (w[3] - w[2]) * c3;
  switch (s) {
    case Subcase::i: break;
    case Subcase::ii: v += gh * (c1 - c2 - c3) * (1.0 - c3); break;
    case Subcase::iii: v += gh * c3 * (c2 + c3 - c1 + 1.0); break;
    case Subcase::iv: v += gh * (c1 - c2); break;
  }
  return v;
}

double lambda0(const SectorLabel& c, const FourWaveParams& p) {
  return lambda0_for_subcase(c, shape_of(c).subcase, p);
}

std::vector<FockState> basis_states(const SectorLabel& c) {
  require_label(c);
  const int lo = std::max(0, c.c3);
  const int hi = std::min(c.c1, c.c2 + c.c3);
  std::vector<FockState> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) out.push_back({n, c.c1 - n, n - c.c3, c.c2 + c.c3 - n});
  return out;
}

SectorLocation sector_of_fock(const FockState& n) {
  SectorLocation loc;
  loc.label = {n[0] + n[1], n[2] + n[3], n[0] - n[2]};
  loc.index = n[0] - std::max(0, loc.label.c3);
  return loc;
}

std::vector<SectorLabel> sectors_up_to(int T) {
  // Total quanta in a sector is c1 + c2, constant across its basis.
  std::vector<SectorLabel> out;
  for (int c1 = 0; c1 <= T; ++c1)
    for (int c2 = 0; c1 + c2 <= T; ++c2)
      for (int c3 = -c2; c3 <= c1; ++c3) out.push_back({c1, c2, c3});
  return out;
}

std::string sector_report_json(const SectorLabel& c, const FourWaveParams& p) {
  const SectorShape sh = shape_of(c);
  nlohmann::ordered_json j;
  j["c1"] = c.c1;
  j["c2"] = c.c2;
  j["c3"] = c.c3;
  j["subcase"] = subcase_name(sh.subcase);
  j["N"] = sh.N;
  j["gamma"] = sh.gamma;
  j["delta"] = sh.delta;
  j["lambda0"] = lambda0(c, p);
  return j.dump();
}

}  // namespace fwm
