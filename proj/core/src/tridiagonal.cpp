#include "fwm/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fwm/error.hpp"

namespace fwm {

Eigen::MatrixXd SymTridiagonal::dense() const {
  const int n = size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag[i];
  for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = off[i];
  return m;
}

double SymTridiagonal::norm_inf() const {
  double best = 0.0;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(off[i - 1]);
    if (i + 1 < n) row += std::abs(off[i]);
    best = std::max(best, row);
  }
  return best;
}

EigenSystem oracle_diagonalize(const SymTridiagonal& m, bool want_vectors) {
  const int n = m.size();
  if (static_cast<int>(m.off.size()) != std::max(0, n - 1))
    throw Error(Errc::ShapeMismatch, "off-diagonal length must be n-1");

  std::vector<double> d(m.diag);
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i + 1 < n; ++i) e[i] = m.off[i];

  Eigen::MatrixXd v;
  if (want_vectors) v = Eigen::MatrixXd::Identity(n, n);

  const double eps = std::numeric_limits<double>::epsilon();
  const int cap = 60;
  double f = 0.0, tst1 = 0.0;

  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int mm = l;
    while (mm < n - 1 && std::abs(e[mm]) > eps * tst1) ++mm;

    if (mm > l) {
      int iter = 0;
      do {
        if (++iter > cap) throw Error(Errc::NoConvergence, "QL sweep cap exceeded at index " + std::to_string(l));
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[mm];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = mm - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (want_vectors) {
            for (int k = 0; k < n; ++k) {
              h = v(k, i + 1);
              v(k, i + 1) = s * v(k, i) + c * h;
              v(k, i) = c * v(k, i) - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

  EigenSystem out;
  out.values.resize(n);
  if (want_vectors) out.vectors.resize(n, n);
  for (int j = 0; j < n; ++j) {
    out.values(j) = d[order[j]];
    if (want_vectors) out.vectors.col(j) = v.col(order[j]);
  }
  return out;
}

EigenSystem oracle_diagonalize(const Eigen::MatrixXd& m, bool want_vectors) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw Error(Errc::ShapeMismatch, "matrix must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  SymTridiagonal t;
  t.diag.resize(static_cast<std::size_t>(n));
  t.off.resize(static_cast<std::size_t>(std::max(0, n - 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-12 * scale)
        throw Error(Errc::ShapeMismatch, "matrix is not symmetric");
      if (std::abs(i - j) > 1 && m(i, j) != 0.0) throw Error(Errc::ShapeMismatch, "matrix is not tridiagonal");
    }
    t.diag[i] = m(i, i);
    if (i + 1 < n) t.off[i] = 0.5 * (m(i, i + 1) + m(i + 1, i));
  }
  return oracle_diagonalize(t, want_vectors);
}

}  // namespace fwm
