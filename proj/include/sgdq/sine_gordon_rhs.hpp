#pragma once

#include <array>
#include <functional>
#include <utility>

#include "sgdq/grid_field.hpp"
#include "sgdq/spline_weights.hpp"

namespace sgdq {

// Coefficients of u_tt + beta u_t = u_xx + u_yy - phi(x,y) sin(u).
struct PdeParams {
  double beta = 0.0;
  ScalarFn phi;
};

// Normal-derivative data on the four faces, expressed as the coordinate
// derivative: left/right give du/dx at x=a and x=b as functions of (y, t);
// bottom/top give du/dy at y=c and y=d as functions of (x, t).
struct BoundaryData {
  std::function<double(double, double)> left, right, bottom, top;

  static BoundaryData homogeneous();
};

// Overwrites the four boundary faces of u so that the quadrature first
// derivative matches the Neumann data at time t.  Each face pair reduces to
// a 2x2 solve per grid line; x faces are closed first for every j, then the
// y faces for every i, which finalizes the corners.
void enforce_neumann_inplace(Field& u, const WeightSet& w, const BoundaryData& bd, double t);
Field enforce_neumann(const Field& u, const WeightSet& w, const BoundaryData& bd, double t);

// Semi-discrete right side: du/dt = v and
// dv/dt = W2x u + W2y u - phi .* sin(u) - beta v.
// Expects u with the Neumann closure already applied at the evaluation time.
std::pair<Field, Field> evaluate_rhs(const Field& u, const Field& v, const PdeParams& p,
                                     const WeightSet& w);

// Grid, weights, coefficients and boundary data bundled for the integrator.
//
// eval gives every node -- the boundary faces included -- its own dynamics.
// The three second-derivative rows nearest each face are rebuilt as one-sided
// stencils that take the prescribed normal derivative as an extra datum, so
// the flux condition enters the evolution as a source term on those rows and
// boundary values never need an algebraic overwrite during time stepping.
// Integrate with a no-op closure; the interior rows are the plain quadrature
// weights.  enforce remains available as the standalone face closure for
// callers that want to impose the flux condition on a single field.
class SineGordonOperator {
 public:
  SineGordonOperator(const UniformGrid& grid, WeightSet weights, const PdeParams& params,
                     BoundaryData boundary);

  void enforce(Field& u, double t) const;
  void eval(const Field& u, const Field& v, double t, Field& dudt, Field& dvdt) const;

  const UniformGrid& grid() const { return grid_; }
  const WeightSet& weights() const { return weights_; }
  double beta() const { return beta_; }

 private:
  UniformGrid grid_;
  WeightSet weights_;
  double beta_ = 0.0;
  BoundaryData boundary_;
  Field phi_values_;
  // Second-derivative matrices with the flux-anchored face rows, plus the
  // per-row weights on the normal-derivative datum (row r and its mirror).
  Matrix lap_x_, lap_y_;
  std::array<double, 3> flux_w_x_{}, flux_w_y_{};
  int anchored_x_ = 0, anchored_y_ = 0;
};

}  // namespace sgdq
