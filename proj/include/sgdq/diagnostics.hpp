#pragma once

#include "sgdq/grid_field.hpp"
#include "sgdq/spline_weights.hpp"
#include "sgdq/ssprk54.hpp"

namespace sgdq {

struct ErrorReport {
  double time = 0.0;
  double l_inf = 0.0;
  double rms = 0.0;
  int nx = 0, ny = 0;
  double dt = 0.0;
};

// Maximum-norm and root-mean-square distance between two fields on the same
// grid; rms divides the squared sum by the node count before the root.
ErrorReport error_norms(const Field& numerical, const Field& exact, double time = 0.0,
                        double dt = 0.0);

struct RingDiagnostic {
  double time = 0.0;
  double radius = 0.0;
  double amplitude = 0.0;
  bool degenerate = false;  // amplitude below 1e-12; radius then has no meaning
};

// Location (x > 0) of the largest |sin(u/2)| along the grid line nearest
// y = 0.  Ties go to the smaller x; the nearest-line tie goes to smaller y.
RingDiagnostic ring_radius(const Field& u, double time = 0.0);

struct DiagonalRadii {
  double along_y_eq_x = 0.0;
  double along_y_eq_minus_x = 0.0;
};

// Distance from the origin of the largest |sin(u/2)| along the two grid
// diagonals; needs a square grid on a symmetric domain.
DiagonalRadii diagonal_ring_radii(const Field& u);

struct EnergyDiagnostic {
  double time = 0.0;
  double energy = 0.0;
};

// Trapezoid-rule total energy: integral of v^2/2 + (u_x^2 + u_y^2)/2 +
// phi (1 - cos u), with gradients taken from the first-order weights.
EnergyDiagnostic discrete_energy(const SolverState& state, const WeightSet& w, const ScalarFn& phi);

}  // namespace sgdq
