#include "fwm/dualhahn.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "fwm/csv.hpp"
#include "fwm/error.hpp"

namespace fwm {

namespace mp = boost::multiprecision;

namespace {

void check_params(const DualHahnParams& p) {
  if (p.gamma < 0 || p.delta < 0 || p.N < 0)
    throw Error(Errc::InvalidLabel, "dual Hahn parameters must be nonnegative");
}

void check_index(int i, const DualHahnParams& p) {
  if (i < 0 || i > p.N)
    throw Error(Errc::IndexOutOfRange, "index " + std::to_string(i) + " outside [0," + std::to_string(p.N) + "]");
}

mp::cpp_int binomial(int n, int k) {
  mp::cpp_int r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

// sqrt(binom(gamma+n, n) * binom(delta+N-n, N-n))
double prefactor(int n, const DualHahnParams& p) {
  const mp::cpp_int b = binomial(p.gamma + n, n) * binomial(p.delta + p.N - n, p.N - n);
  return std::sqrt(b.convert_to<double>());
}

// Boost 1.74 rejects negative denominators; move the sign up front.
mp::cpp_rational ratio(mp::cpp_int num, mp::cpp_int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return mp::cpp_rational(num, den);
}

double lpoch(double x, int k) { return std::lgamma(x + k) - std::lgamma(x); }

}  // namespace

std::vector<double> eigenvalues(const DualHahnParams& p) {
  check_params(p);
  std::vector<double> out(static_cast<std::size_t>(p.N + 1));
  const long long s = p.gamma + p.delta + 1;
  for (int k = 0; k <= p.N; ++k) out[k] = static_cast<double>(static_cast<long long>(k) * (k + s));
  return out;
}

double polynomial_value(int n, int k, const DualHahnParams& p) {
  check_params(p);
  check_index(n, p);
  check_index(k, p);
  mp::cpp_rational term = 1, sum = 1;
  for (int j = 1; j <= std::min(n, k); ++j) {
    mp::cpp_int num = mp::cpp_int(j - 1 - n) * (j - 1 - k) * (k + p.gamma + p.delta + j);
    mp::cpp_int den = mp::cpp_int(p.gamma + j) * (j - 1 - p.N) * j;
    term *= ratio(std::move(num), std::move(den));
    sum += term;
  }
  return prefactor(n, p) * sum.convert_to<double>();
}

double polynomial_value_recurrence(int n, int k, const DualHahnParams& p) {
  check_params(p);
  check_index(n, p);
  check_index(k, p);
  const mp::cpp_int lambda = mp::cpp_int(k) * (k + p.gamma + p.delta + 1);
  mp::cpp_rational prev = 0, cur = 1;
  for (int m = 0; m < n; ++m) {
    const mp::cpp_int A = mp::cpp_int(m + p.gamma + 1) * (m - p.N);
    const mp::cpp_int C = mp::cpp_int(m) * (m - p.delta - p.N - 1);
    mp::cpp_rational next = (mp::cpp_rational(lambda + A + C) * cur - mp::cpp_rational(C) * prev) * ratio(1, A);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return prefactor(n, p) * cur.convert_to<double>();
}

double log_norm(int k, const DualHahnParams& p) {
  check_params(p);
  check_index(k, p);
  const double g = p.gamma, d = p.delta, N = p.N;
  return std::lgamma(k + 1.0) + lpoch(d + 1, k) + lpoch(k + g + d + 1, p.N + 1) + std::lgamma(N - k + 1) -
         2.0 * std::lgamma(N + 1) - lpoch(g + 1, k) - std::log(2.0 * k + g + d + 1);
}

double norm(int k, const DualHahnParams& p) { return std::exp(log_norm(k, p)); }

SymTridiagonal dual_hahn_jacobi(const DualHahnParams& p) {
  check_params(p);
  const int N = p.N;
  const double g = p.gamma, d = p.delta;
  SymTridiagonal t;
  t.diag.resize(static_cast<std::size_t>(N + 1));
  t.off.resize(static_cast<std::size_t>(N));
  for (int n = 0; n <= N; ++n) t.diag[n] = double(n) * (N - n + d + 1) + double(N - n) * (g + n + 1);
  for (int n = 0; n < N; ++n) t.off[n] = std::sqrt(double(n + 1) * (N - n) * (g + n + 1) * (N - n + d));
  return t;
}

SpectralTable transition_matrix(const DualHahnParams& p) {
  check_params(p);
  if (p.N > kMaxDualHahnN)
    throw Error(Errc::NumericalInstability, "N = " + std::to_string(p.N) + " exceeds the double-precision cap");

  const int N = p.N;
  const double g = p.gamma, d = p.delta;
  SpectralTable tab;
  tab.params = p;
  tab.lambdas = eigenvalues(p);
  tab.norms.resize(static_cast<std::size_t>(N + 1));
  tab.R.resize(N + 1, N + 1);

  const SymTridiagonal J = dual_hahn_jacobi(p);
  const auto& a = J.diag;
  const auto& b = J.off;
  std::vector<double> v(static_cast<std::size_t>(N + 1));

  for (int k = 0; k <= N; ++k) {
    const double ln = log_norm(k, p);
    tab.norms[k] = std::exp(ln);
    const double lam = tab.lambdas[k];

    // Exact end values: n = 0 directly, n = N through Chu-Vandermonde.
    v[0] = std::exp(0.5 * (std::lgamma(d + N + 1) - std::lgamma(d + 1) - std::lgamma(N + 1.0) - ln));
    const double last_mag = std::exp(0.5 * (std::lgamma(g + N + 1) - std::lgamma(g + 1) - std::lgamma(N + 1.0) - ln) +
                                     lpoch(d + 1, k) - lpoch(g + 1, k));
    const double last = ((N + k) % 2 == 0) ? last_mag : -last_mag;

    // Forward while the magnitude grows; the decaying tail comes from the other end.
    int crest = N;
    for (int n = 0; n < N; ++n) {
      const double below = n > 0 ? b[n - 1] * v[n - 1] : 0.0;
      const double next = ((lam - a[n]) * v[n] - below) / b[n];
      if (std::abs(next) < std::abs(v[n])) {
        crest = n;
        break;
      }
      v[n + 1] = next;
    }
    if (crest < N) {
      v[N] = last;
      for (int n = N; n > crest + 1; --n) {
        const double above = n < N ? b[n] * v[n + 1] : 0.0;
        v[n - 1] = ((lam - a[n]) * v[n] - above) / b[n - 1];
      }
    }

    double col = 0.0;
    for (int n = 0; n <= N; ++n) {
      tab.R(n, k) = v[n];
      col += v[n] * v[n];
    }
    if (std::abs(std::sqrt(col) - 1.0) > 1e-6)
      throw Error(Errc::NumericalInstability, "column " + std::to_string(k) + " lost normalization");
  }
  return tab;
}

void SpectralTable::write_csv(std::ostream& out) const {
  CsvWriter w(out, {"k", "lambda", "norm"});
  for (std::size_t k = 0; k < lambdas.size(); ++k) w.row({double(k), lambdas[k], norms[k]});
}

void SpectralTable::write_matrix_csv(std::ostream& out) const {
  for (Eigen::Index n = 0; n < R.rows(); ++n) {
    for (Eigen::Index k = 0; k < R.cols(); ++k) out << (k ? "," : "") << format_double(R(n, k));
    out << '\n';
  }
}

}  // namespace fwm
