#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "fwm/sector.hpp"

namespace fwm {

using cplx = std::complex<double>;

// All 4-mode occupation tuples with n0+n1+n2+n3 <= T, ordered by total then lexicographically.
class TruncatedFockSpace {
 public:
  static constexpr int kMaxT = 24;

  explicit TruncatedFockSpace(int T);

  int max_total_quanta() const { return T_; }
  std::size_t size() const { return basis_.size(); }
  const FockState& state(std::size_t i) const { return basis_[i]; }
  const std::vector<FockState>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const FockState& n) const;

 private:
  int T_;
  std::vector<FockState> basis_;
  std::vector<int> lookup_;  // (T+1)^4 table, -1 when absent
};

struct Ladder {
  int mode;
  bool dagger;
};

// Operator product as written: the rightmost factor acts first.
using LadderWord = std::vector<Ladder>;

struct OperatorTerm {
  cplx coef;
  LadderWord word;
};

inline Ladder ann(int k) { return {k, false}; }
inline Ladder cre(int k) { return {k, true}; }

// a|n> = sqrt(hbar n)|n-1>, a*|n> = sqrt(hbar (n+1))|n+1>. Empty when the word annihilates |n>.
std::optional<std::pair<double, FockState>> apply_word(const LadderWord& w, FockState n, double hbar);

using SparseC = Eigen::SparseMatrix<cplx>;
using SparseR = Eigen::SparseMatrix<double>;

// Matrix of sum_t coef_t * word_t; images leaving the space are dropped.
SparseC assemble(const TruncatedFockSpace& space, const std::vector<OperatorTerm>& terms, double hbar);

// a_k applied to a coefficient vector on the space.
Eigen::VectorXcd apply_annihilation(const TruncatedFockSpace& space, int k, const Eigen::VectorXcd& v, double hbar);

std::size_t binomial_size(int T);  // binom(T+4, 4)

}  // namespace fwm
