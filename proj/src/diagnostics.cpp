#include "sgdq/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace sgdq {

ErrorReport error_norms(const Field& numerical, const Field& exact, double time, double dt) {
  if (!numerical.grid().same_layout(exact.grid()))
    throw std::invalid_argument("error_norms: grid mismatch");
  const UniformGrid& g = numerical.grid();
  double linf = 0.0;
  double sq = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    const double* a = numerical.row(i);
    const double* b = exact.row(i);
    for (int j = 0; j < g.ny; ++j) {
      const double d = std::abs(a[j] - b[j]);
      if (d > linf) linf = d;
      sq += d * d;
    }
  }
  ErrorReport r;
  r.time = time;
  r.l_inf = linf;
  r.rms = std::sqrt(sq / (static_cast<double>(g.nx) * g.ny));
  r.nx = g.nx;
  r.ny = g.ny;
  r.dt = dt;
  return r;
}

RingDiagnostic ring_radius(const Field& u, double time) {
  const UniformGrid& g = u.grid();
  int jbest = 0;
  for (int j = 1; j < g.ny; ++j) {
    if (std::abs(g.y(j)) < std::abs(g.y(jbest))) jbest = j;
  }

  RingDiagnostic r;
  r.time = time;
  bool found = false;
  for (int i = 0; i < g.nx; ++i) {
    if (!(g.x(i) > 0.0)) continue;
    const double amp = std::abs(std::sin(0.5 * u(i, jbest)));
    if (!found || amp > r.amplitude) {
      r.amplitude = amp;
      r.radius = g.x(i);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("ring_radius: grid has no nodes with x > 0");
  r.degenerate = r.amplitude < 1e-12;
  return r;
}

DiagonalRadii diagonal_ring_radii(const Field& u) {
  const UniformGrid& g = u.grid();
  if (g.nx != g.ny || g.a != -g.b || g.c != -g.d || g.dx != g.dy)
    throw std::invalid_argument("diagonal_ring_radii: needs a square grid on a symmetric domain");

  DiagonalRadii out;
  double best_main = -1.0, best_anti = -1.0;
  for (int i = 0; i < g.nx; ++i) {
    const double x = g.x(i);
    if (!(x > 0.0)) continue;
    const double amp_main = std::abs(std::sin(0.5 * u(i, i)));
    if (amp_main > best_main) {
      best_main = amp_main;
      out.along_y_eq_x = std::sqrt(x * x + g.y(i) * g.y(i));
    }
    const int j = g.ny - 1 - i;
    const double amp_anti = std::abs(std::sin(0.5 * u(i, j)));
    if (amp_anti > best_anti) {
      best_anti = amp_anti;
      out.along_y_eq_minus_x = std::sqrt(x * x + g.y(j) * g.y(j));
    }
  }
  if (best_main < 0.0) throw std::invalid_argument("diagonal_ring_radii: grid has no nodes with x > 0");
  return out;
}

EnergyDiagnostic discrete_energy(const SolverState& state, const WeightSet& w, const ScalarFn& phi) {
  if (!phi) throw std::invalid_argument("discrete_energy: phi must be set");
  if (!state.u.grid().same_layout(state.v.grid()))
    throw std::invalid_argument("discrete_energy: u/v grid mismatch");
  const UniformGrid& g = state.u.grid();
  const Field ux = apply_weights_x(w.w1x, state.u);
  const Field uy = apply_weights_y(w.w1y, state.u);

  double sum = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    const double wi = (i == 0 || i == g.nx - 1) ? 0.5 : 1.0;
    const double* ui = state.u.row(i);
    const double* vi = state.v.row(i);
    const double* gx = ux.row(i);
    const double* gy = uy.row(i);
    for (int j = 0; j < g.ny; ++j) {
      const double wj = (j == 0 || j == g.ny - 1) ? 0.5 : 1.0;
      const double density = 0.5 * vi[j] * vi[j] + 0.5 * (gx[j] * gx[j] + gy[j] * gy[j]) +
                             phi(g.x(i), g.y(j)) * (1.0 - std::cos(ui[j]));
      sum += wi * wj * density;
    }
  }
  return EnergyDiagnostic{state.t, sum * g.dx * g.dy};
}

}  // namespace sgdq
