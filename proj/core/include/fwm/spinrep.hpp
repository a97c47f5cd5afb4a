#pragma once

#include <string>
#include <vector>

#include "fwm/classical.hpp"
#include "fwm/coherent.hpp"
#include "fwm/fock.hpp"
#include "fwm/sector.hpp"

namespace fwm {

// Two commuting angular momenta built from mode pairs (0,1) and (2,3):
// L = (n0+n1)/2, M+ = a0 a1*, M3 = (n1-n0)/2, R = (n2+n3)/2, S+ = a2* a3, S3 = (n2-n3)/2.
struct SpinOperators {
  int T = 0;
  double hbar = 1.0;
  SparseC L, M1, M2, M3, Mplus, Mminus;
  SparseC R, S1, S2, S3, Splus, Sminus;
};

SpinOperators build_spin_ops(int T, double hbar);

// (w0+w1+2 g hbar) L + (w1-w0) M3 + w2 n2 + w3 n3 + g[(n2+n3) L + (n2-n3) M3 + a2 a3* M+ + a2* a3 M-]
SparseC h_dicke(const SpinOperators& s, const FourWaveParams& p);
// (w0+w1+2 g hbar) L + (w1-w0) M3 + (w2+w3) R + (w2-w3) S3 + g[2 L R + 2 M3 S3 + M+ S- + M- S+]
SparseC h_ms(const SpinOperators& s, const FourWaveParams& p);

struct AuditRow {
  std::string relation;
  double deviation = 0.0;
};

// so(4) commutators, Casimirs, adjoint pairings and cross-commutators.
std::vector<AuditRow> so4_audit(const SpinOperators& s);
// [H_MS, L], [H_MS, R], [H_MS, M3+S3].
std::vector<AuditRow> conservation_audit(const SpinOperators& s, const FourWaveParams& p);
std::string audit_json(const std::vector<AuditRow>& rows);

double max_abs(const SparseC& m);

struct ClassicalSpin {
  double L = 0.0, M1 = 0.0, M2 = 0.0, M3 = 0.0;
  double R = 0.0, S1 = 0.0, S2 = 0.0, S3 = 0.0;
};

ClassicalSpin classical_spin_functions(const ModeState& z);

enum class SpinComponent { L, M1, M2, M3, R, S1, S2, S3 };
const char* spin_component_name(SpinComponent c);
// Normal-ordered symbol of the quantum operator, equal to the classical function.
NormalOrderedObservable spin_symbol(SpinComponent c);

}  // namespace fwm
