#include "fwm/kummer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fwm/csv.hpp"
#include "fwm/error.hpp"
#include "fwm/parallel.hpp"

namespace fwm {

ShapePoint phi_map(const ReducedCoords& rc) {
  if (!(rc.I0 > rc.b.lower() && rc.I0 < rc.b.upper()))
    throw Error(Errc::OutOfInterval, "I0 = " + format_double(rc.I0) + " is not interior");
  const double r = std::sqrt(g0(rc.I0, rc.b));
  return {r * std::cos(rc.psi0), r * std::sin(rc.psi0), rc.I0, rc.b};
}

ShapePoint shape_point(const ReducedSample& s, const FrozenActions& b) {
  const double r = std::sqrt(std::max(0.0, g0(s.I0, b)));
  return {r * s.phase.real(), r * s.phase.imag(), s.I0, b};
}

double casimir(const ShapePoint& pt) { return 0.5 * (g0(pt.I0, pt.b) - pt.x * pt.x - pt.y * pt.y); }

std::array<double, 3> casimir_gradient(const ShapePoint& pt) {
  return {-pt.x, -pt.y, 0.5 * g0_prime(pt.I0, pt.b)};
}

std::array<double, 3> fd_gradient(const ShapeField& f, const ShapePoint& pt, double h_rel) {
  const std::array<double, 3> c{pt.x, pt.y, pt.I0};
  std::array<double, 3> grad{};
  for (int k = 0; k < 3; ++k) {
    const double h = h_rel * std::max(1.0, std::abs(c[k]));
    auto hi = c, lo = c;
    hi[k] += h;
    lo[k] -= h;
    grad[k] = (f(hi[0], hi[1], hi[2]) - f(lo[0], lo[1], lo[2])) / (2.0 * h);
  }
  return grad;
}

double nambu_bracket(const ShapeField& f, const ShapeField& g, const ShapePoint& pt, double h_rel) {
  const auto a = casimir_gradient(pt);
  const auto b = fd_gradient(f, pt, h_rel);
  const auto c = fd_gradient(g, pt, h_rel);
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

double shape_energy(const ShapePoint& pt, const FourWaveParams& p) {
  return p.detuning() * pt.I0 + frozen_energy(pt.b, p) + p.g * (quadratic_part(pt.I0, pt.b) + 2.0 * pt.x);
}

ShapeReport trajectory_on_shape(const ReducedTrajectory& traj, const FourWaveParams& p) {
  ShapeReport rep;
  rep.polyline.reserve(traj.samples.size());
  for (const auto& s : traj.samples) {
    const ShapePoint pt = shape_point(s, traj.b);
    rep.max_casimir = std::max(rep.max_casimir, std::abs(casimir(pt)));
    rep.max_energy_deviation = std::max(rep.max_energy_deviation, std::abs(shape_energy(pt, p) - traj.energy));
    rep.polyline.push_back({s.t, pt.x, pt.y, pt.I0});
  }
  return rep;
}

std::vector<MeshRow> shape_mesh(const FrozenActions& b, int n_I0, int n_psi) {
  if (n_I0 < 1 || n_psi < 1) throw Error(Errc::ConfigError, "mesh needs at least one node per direction");
  const double lo = b.lower(), hi = b.upper();
  if (!(hi > lo)) throw Error(Errc::OutOfInterval, "empty action interval");
  std::vector<MeshRow> mesh(static_cast<std::size_t>(n_I0) * n_psi);
  parallel_for(static_cast<std::size_t>(n_I0), [&](std::size_t i) {
    const double I0 = lo + (hi - lo) * double(i + 1) / (n_I0 + 1);
    const double r = std::sqrt(g0(I0, b));
    for (int j = 0; j < n_psi; ++j) {
      const double psi = 2.0 * std::numbers::pi * j / n_psi;
      mesh[i * n_psi + j] = {I0, psi, r * std::cos(psi), r * std::sin(psi)};
    }
  });
  return mesh;
}

void write_mesh_csv(std::ostream& out, const std::vector<MeshRow>& mesh) {
  CsvWriter w(out, {"I0", "psi0", "x", "y"});
  for (const auto& m : mesh) w.row({m.I0, m.psi0, m.x, m.y});
}

void write_polyline_csv(std::ostream& out, const std::vector<ShapeSample>& poly) {
  CsvWriter w(out, {"t", "x", "y", "I0"});
  for (const auto& s : poly) w.row({s.t, s.x, s.y, s.I0});
}

}  // namespace fwm
