#include "sgdq/grid_field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sgdq {

UniformGrid build_grid(double a, double b, double c, double d, int nx, int ny) {
  if (!(b > a) || !(d > c)) throw std::invalid_argument("build_grid: bounds must satisfy a < b and c < d");
  if (nx < 5 || ny < 5) throw std::invalid_argument("build_grid: need at least 5 nodes per axis");
  UniformGrid g;
  g.a = a;
  g.b = b;
  g.c = c;
  g.d = d;
  g.nx = nx;
  g.ny = ny;
  g.dx = (b - a) / (nx - 1);
  g.dy = (d - c) / (ny - 1);
  return g;
}

Field::Field(const UniformGrid& g, double fill)
    : grid_(g), v_(static_cast<std::size_t>(g.nx) * g.ny, fill) {}

Field sample(const UniformGrid& g, const ScalarFn& f) {
  if (!f) throw std::invalid_argument("sample: empty function");
  Field out(g);
  for (int i = 0; i < g.nx; ++i) {
    double* row = out.row(i);
    for (int j = 0; j < g.ny; ++j) {
      const double v = f(g.x(i), g.y(j));
      if (!std::isfinite(v)) {
        throw std::domain_error("sample: non-finite value at (" + std::to_string(g.x(i)) + ", " +
                                std::to_string(g.y(j)) + ")");
      }
      row[j] = v;
    }
  }
  return out;
}

bool all_finite(const Field& f) {
  for (double v : f.values()) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace sgdq
