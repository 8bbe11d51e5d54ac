#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace sgdq {

// Uniform tensor-product grid on [a,b] x [c,d] with nx * ny nodes.
// Node i along x sits at a + i*dx; the last node coincides with b.
struct UniformGrid {
  double a = 0.0, b = 1.0, c = 0.0, d = 1.0;
  int nx = 0, ny = 0;
  double dx = 0.0, dy = 0.0;

  double x(int i) const { return a + i * dx; }
  double y(int j) const { return c + j * dy; }

  bool same_layout(const UniformGrid& o) const {
    return nx == o.nx && ny == o.ny && a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

UniformGrid build_grid(double a, double b, double c, double d, int nx, int ny);

// Scalar field on a grid; entry (i,j) is the value at (x_i, y_j).
// Storage is i-major, so a row holds all y values for one x node.
class Field {
 public:
  Field() = default;
  explicit Field(const UniformGrid& g, double fill = 0.0);

  double& operator()(int i, int j) { return v_[idx(i, j)]; }
  double operator()(int i, int j) const { return v_[idx(i, j)]; }

  double* row(int i) { return v_.data() + idx(i, 0); }
  const double* row(int i) const { return v_.data() + idx(i, 0); }

  const UniformGrid& grid() const { return grid_; }
  std::vector<double>& values() { return v_; }
  const std::vector<double>& values() const { return v_; }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * grid_.ny + j; }

  UniformGrid grid_{};
  std::vector<double> v_;
};

using ScalarFn = std::function<double(double, double)>;

// Evaluates f at every node; rejects non-finite values.
Field sample(const UniformGrid& g, const ScalarFn& f);

bool all_finite(const Field& f);

}  // namespace sgdq
