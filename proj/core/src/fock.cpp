#include "fwm/fock.hpp"

#include <cmath>

#include "fwm/error.hpp"

namespace fwm {

std::size_t binomial_size(int T) {
  const std::size_t t = static_cast<std::size_t>(T);
  return (t + 1) * (t + 2) * (t + 3) * (t + 4) / 24;
}

TruncatedFockSpace::TruncatedFockSpace(int T) : T_(T) {
  if (T < 0) throw Error(Errc::TruncationTooLarge, "truncation must be nonnegative");
  if (T > kMaxT) throw Error(Errc::TruncationTooLarge, "truncation " + std::to_string(T) + " exceeds " + std::to_string(kMaxT));
  const std::size_t side = static_cast<std::size_t>(T + 1);
  lookup_.assign(side * side * side * side, -1);
  basis_.reserve(binomial_size(T));
  for (int total = 0; total <= T; ++total)
    for (int n0 = total; n0 >= 0; --n0)
      for (int n1 = total - n0; n1 >= 0; --n1)
        for (int n2 = total - n0 - n1; n2 >= 0; --n2) {
          const FockState s{n0, n1, n2, total - n0 - n1 - n2};
          lookup_[((s[0] * side + s[1]) * side + s[2]) * side + s[3]] = static_cast<int>(basis_.size());
          basis_.push_back(s);
        }
}

std::optional<std::size_t> TruncatedFockSpace::index_of(const FockState& n) const {
  int total = 0;
  for (int x : n) {
    if (x < 0) return std::nullopt;
    total += x;
  }
  if (total > T_) return std::nullopt;
  const std::size_t side = static_cast<std::size_t>(T_ + 1);
  return static_cast<std::size_t>(lookup_[((n[0] * side + n[1]) * side + n[2]) * side + n[3]]);
}

std::optional<std::pair<double, FockState>> apply_word(const LadderWord& w, FockState n, double hbar) {
  double amp = 1.0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int& occ = n[it->mode];
    if (it->dagger) {
      amp *= std::sqrt(hbar * (occ + 1));
      ++occ;
    } else {
      if (occ == 0) return std::nullopt;
      amp *= std::sqrt(hbar * occ);
      --occ;
    }
  }
  return std::make_pair(amp, n);
}

SparseC assemble(const TruncatedFockSpace& space, const std::vector<OperatorTerm>& terms, double hbar) {
  std::vector<Eigen::Triplet<cplx>> trips;
  trips.reserve(space.size() * terms.size());
  for (std::size_t j = 0; j < space.size(); ++j) {
    for (const auto& t : terms) {
      auto img = apply_word(t.word, space.state(j), hbar);
      if (!img) continue;
      auto i = space.index_of(img->second);
      if (!i) continue;
      trips.emplace_back(static_cast<int>(*i), static_cast<int>(j), t.coef * img->first);
    }
  }
  const int n = static_cast<int>(space.size());
  SparseC m(n, n);
  m.setFromTriplets(trips.begin(), trips.end());
  m.prune([](Eigen::Index, Eigen::Index, const cplx& v) { return v != cplx(0.0, 0.0); });
  return m;
}

Eigen::VectorXcd apply_annihilation(const TruncatedFockSpace& space, int k, const Eigen::VectorXcd& v, double hbar) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (std::size_t j = 0; j < space.size(); ++j) {
    FockState s = space.state(j);
    s[k] += 1;
    auto src = space.index_of(s);
    if (src) out(static_cast<Eigen::Index>(j)) = std::sqrt(hbar * s[k]) * v(static_cast<Eigen::Index>(*src));
  }
  return out;
}

}  // namespace fwm
