#pragma once

#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "fwm/tridiagonal.hpp"

namespace fwm {

struct DualHahnParams {
  int gamma = 0;
  int delta = 0;
  int N = 0;
};

struct SpectralTable {
  DualHahnParams params;
  std::vector<double> lambdas;
  std::vector<double> norms;
  Eigen::MatrixXd R;          // R(n, k)
  bool signed_gauge = true;   // (-1)^n applied to rows

  void write_csv(std::ostream& out) const;         // k,lambda,norm
  void write_matrix_csv(std::ostream& out) const;  // row-major R
};

inline constexpr int kMaxDualHahnN = 120;

std::vector<double> eigenvalues(const DualHahnParams& p);

// R_n(lambda_k) from the terminating 3F2 sum, evaluated in exact rationals.
double polynomial_value(int n, int k, const DualHahnParams& p);

// Same value from the three-term recurrence in n, seeded at n = 0, in exact rationals.
double polynomial_value_recurrence(int n, int k, const DualHahnParams& p);

double norm(int k, const DualHahnParams& p);
double log_norm(int k, const DualHahnParams& p);

// Jacobi matrix whose eigenvectors are the gauged dual Hahn columns.
SymTridiagonal dual_hahn_jacobi(const DualHahnParams& p);

SpectralTable transition_matrix(const DualHahnParams& p);

}  // namespace fwm
