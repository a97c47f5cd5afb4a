#pragma once

#include <vector>

#include <Eigen/Dense>

namespace fwm {

struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // off[i] couples i and i+1

  int size() const { return static_cast<int>(diag.size()); }
  Eigen::MatrixXd dense() const;
  // Largest absolute row sum.
  double norm_inf() const;
};

struct EigenSystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns, empty when not requested
};

// Implicit-shift QL (tql2 lineage). Throws NoConvergence past the sweep cap.
EigenSystem oracle_diagonalize(const SymTridiagonal& m, bool want_vectors = true);

// Dense entry point: requires symmetry to 1e-12 and tridiagonal structure.
EigenSystem oracle_diagonalize(const Eigen::MatrixXd& m, bool want_vectors = true);

}  // namespace fwm
