#pragma once

#include <array>
#include <functional>
#include <ostream>
#include <vector>

#include "fwm/classical.hpp"

namespace fwm {

struct ShapePoint {
  double x = 0.0, y = 0.0, I0 = 0.0;
  FrozenActions b;
};

// (sqrt(G0) cos psi0, sqrt(G0) sin psi0, I0)
ShapePoint phi_map(const ReducedCoords& rc);

// Shape point from a trajectory sample, keeping the sample's phase modulus.
ShapePoint shape_point(const ReducedSample& s, const FrozenActions& b);

// (G0(I0) - x^2 - y^2) / 2
double casimir(const ShapePoint& pt);
// Analytic gradient in (x, y, I0) order.
std::array<double, 3> casimir_gradient(const ShapePoint& pt);

// Scalar field on R^3 in (x, y, I0) order.
using ShapeField = std::function<double(double, double, double)>;

std::array<double, 3> fd_gradient(const ShapeField& f, const ShapePoint& pt, double h_rel);

// det[grad C, grad f, grad g], gradients of f and g by central differences with
// step h_rel * max(1, |coordinate|).
double nambu_bracket(const ShapeField& f, const ShapeField& g, const ShapePoint& pt, double h_rel = 1e-5);

// Omega I0 + K + g (Q(I0) + 2 x)
double shape_energy(const ShapePoint& pt, const FourWaveParams& p);

struct ShapeSample {
  double t, x, y, I0;
};

struct ShapeReport {
  double max_casimir = 0.0;
  double max_energy_deviation = 0.0;
  std::vector<ShapeSample> polyline;
};

ShapeReport trajectory_on_shape(const ReducedTrajectory& traj, const FourWaveParams& p);

struct MeshRow {
  double I0, psi0, x, y;
};

// (I0, psi0) grid over the open interval; the endpoints a and b are left out.
std::vector<MeshRow> shape_mesh(const FrozenActions& b, int n_I0 = 200, int n_psi = 100);

void write_mesh_csv(std::ostream& out, const std::vector<MeshRow>& mesh);        // I0,psi0,x,y
void write_polyline_csv(std::ostream& out, const std::vector<ShapeSample>& poly);  // t,x,y,I0

}  // namespace fwm
