#pragma once

#include <array>
#include <string>
#include <vector>

namespace fwm {

// Charges (c1, c2, c3) in units of hbar.
struct SectorLabel {
  int c1 = 0;
  int c2 = 0;
  int c3 = 0;
  friend bool operator==(const SectorLabel&, const SectorLabel&) = default;
};

enum class Subcase { i, ii, iii, iv };

struct SectorShape {
  SectorLabel label;
  int N = 0;
  int gamma = 0;
  int delta = 0;
  Subcase subcase = Subcase::i;
  int base_offset = 0;
  int dim() const { return N + 1; }
};

struct FourWaveParams {
  std::array<double, 4> omega{1.0, 1.0, 1.0, 1.0};
  double g = 1.0;
  double hbar = 1.0;

  // omega0 - omega1 + omega2 - omega3
  double detuning() const;
  // |detuning| <= 1e-12 * max|omega_k|
  bool resonant() const;
  void validate() const;
};

using FockState = std::array<int, 4>;

const char* subcase_name(Subcase s);

bool validate_label(const SectorLabel& c);
std::vector<Subcase> applicable_subcases(const SectorLabel& c);
SectorShape shape_of(const SectorLabel& c);
SectorShape shape_for_subcase(const SectorLabel& c, Subcase s);
// Inverse of the subcase formulas: the label with the given (N, gamma, delta).
SectorLabel label_for_shape(int N, int gamma, int delta, Subcase s);

double lambda0(const SectorLabel& c, const FourWaveParams& p);
double lambda0_for_subcase(const SectorLabel& c, Subcase s, const FourWaveParams& p);

std::vector<FockState> basis_states(const SectorLabel& c);

struct SectorLocation {
  SectorLabel label;
  int index = 0;
};
SectorLocation sector_of_fock(const FockState& n);

// Every label whose basis lies inside total quanta <= T, in lexicographic order.
std::vector<SectorLabel> sectors_up_to(int T);

std::string sector_report_json(const SectorLabel& c, const FourWaveParams& p);

}  // namespace fwm
