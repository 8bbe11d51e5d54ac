#include "sgdq/spline_weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace sgdq {

double SplineTable::value(int offset) const {
  switch (offset) {
    case 0:
      return 4.0;
    case -1:
    case 1:
      return 1.0;
    default:
      return 0.0;
  }
}

double SplineTable::deriv1(int offset) const {
  switch (offset) {
    case -1:
      return 3.0 / h;
    case 1:
      return -3.0 / h;
    default:
      return 0.0;
  }
}

double SplineTable::deriv2(int offset) const {
  switch (offset) {
    case 0:
      return -12.0 / (h * h);
    case -1:
    case 1:
      return 6.0 / (h * h);
    default:
      return 0.0;
  }
}

ModifiedBasis modified_basis_matrix(int n, double h) {
  if (n < 5) throw std::invalid_argument("modified_basis_matrix: need n >= 5");
  if (!(h > 0.0)) throw std::invalid_argument("modified_basis_matrix: need h > 0");

  const SplineTable tab{h};
  ModifiedBasis mb;
  mb.lower.assign(n - 1, 0.0);
  mb.diag.assign(n, 0.0);
  mb.upper.assign(n - 1, 0.0);
  mb.dpsi = Matrix(n, n);

  // psi_m = phi_m plus ghost-spline corrections at the two ends:
  //   psi_0     = phi_0     + 2 phi_{-1}     psi_1     = phi_1     - phi_{-1}
  //   psi_{n-1} = phi_{n-1} + 2 phi_n        psi_{n-2} = phi_{n-2} - phi_n
  // where phi_{-1} and phi_n are centered one spacing outside the grid.
  for (int m = 0; m < n; ++m) {
    std::vector<std::pair<int, double>> parts;  // (spline center node, coefficient)
    parts.emplace_back(m, 1.0);
    if (m == 0) parts.emplace_back(-1, 2.0);
    if (m == 1) parts.emplace_back(-1, -1.0);
    if (m == n - 1) parts.emplace_back(n, 2.0);
    if (m == n - 2) parts.emplace_back(n, -1.0);

    for (const auto& [center, coeff] : parts) {
      for (int k = std::max(0, center - 1); k <= std::min(n - 1, center + 1); ++k) {
        const int off = k - center;
        const double val = coeff * tab.value(off);
        if (val != 0.0) {
          if (k == m) {
            mb.diag[m] += val;
          } else if (k == m + 1) {
            mb.upper[m] += val;
          } else if (k == m - 1) {
            mb.lower[m - 1] += val;
          } else {
            throw std::logic_error("modified_basis_matrix: value outside tridiagonal band");
          }
        }
        mb.dpsi(m, k) += coeff * tab.deriv1(off);
      }
    }
  }
  return mb;
}

namespace {
constexpr double kPivotFloor = 1e-14;
}

TridiagonalFactor::TridiagonalFactor(std::vector<double> lower, std::vector<double> diag,
                                     std::vector<double> upper)
    : lower_(std::move(lower)) {
  const std::size_t n = diag.size();
  if (n == 0) throw std::invalid_argument("TridiagonalFactor: empty system");
  if (lower_.size() + 1 != n || upper.size() + 1 != n)
    throw std::invalid_argument("TridiagonalFactor: off-diagonal bands must have size n-1");

  pivot_.resize(n);
  cprime_.assign(n - 1, 0.0);
  pivot_[0] = diag[0];
  if (std::abs(pivot_[0]) < kPivotFloor) throw std::runtime_error("tridiagonal solve: zero pivot at row 0");
  for (std::size_t i = 1; i < n; ++i) {
    cprime_[i - 1] = upper[i - 1] / pivot_[i - 1];
    pivot_[i] = diag[i] - lower_[i - 1] * cprime_[i - 1];
    if (std::abs(pivot_[i]) < kPivotFloor)
      throw std::runtime_error("tridiagonal solve: zero pivot at row " + std::to_string(i));
  }
}

std::vector<double> TridiagonalFactor::solve(const std::vector<double>& rhs) const {
  const std::size_t n = pivot_.size();
  if (rhs.size() != n) throw std::invalid_argument("tridiagonal solve: rhs size mismatch");
  std::vector<double> x(n);
  x[0] = rhs[0] / pivot_[0];
  for (std::size_t i = 1; i < n; ++i) x[i] = (rhs[i] - lower_[i - 1] * x[i - 1]) / pivot_[i];
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= cprime_[i] * x[i + 1];
  return x;
}

std::vector<double> thomas_solve(const std::vector<double>& lower, const std::vector<double>& diag,
                                 const std::vector<double>& upper, const std::vector<double>& rhs) {
  const TridiagonalFactor lu(lower, diag, upper);
  return lu.solve(rhs);
}

Matrix first_order_weights(int n, double h) {
  const ModifiedBasis mb = modified_basis_matrix(n, h);
  const TridiagonalFactor lu(mb.lower, mb.diag, mb.upper);
  Matrix w1(n, n);
  std::vector<double> rhs(n);
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m < n; ++m) rhs[m] = mb.dpsi(m, i);
    const std::vector<double> wi = lu.solve(rhs);
    for (int k = 0; k < n; ++k) w1(i, k) = wi[k];
  }
  return w1;
}

Matrix shu_weights(const Matrix& w1, const Matrix& w_prev, int r, const std::vector<double>& nodes) {
  const int n = w1.rows;
  if (w1.cols != n || w_prev.rows != n || w_prev.cols != n)
    throw std::invalid_argument("shu_weights: matrices must be square and of equal size");
  if (static_cast<int>(nodes.size()) != n) throw std::invalid_argument("shu_weights: node count mismatch");
  if (r < 2) throw std::invalid_argument("shu_weights: order must be >= 2");
  for (int i = 1; i < n; ++i) {
    if (!(nodes[i] > nodes[i - 1]))
      throw std::invalid_argument("shu_weights: nodes must be strictly increasing");
  }

  Matrix w(n, n);
  for (int i = 0; i < n; ++i) {
    double off_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double v = r * (w1(i, j) * w_prev(i, i) - w_prev(i, j) / (nodes[i] - nodes[j]));
      w(i, j) = v;
      off_sum += v;
    }
    w(i, i) = -off_sum;  // row sums vanish by construction
  }
  return w;
}

Matrix shu_second_order(const Matrix& w1, const std::vector<double>& nodes) {
  return shu_weights(w1, w1, 2, nodes);
}

std::vector<double> x_nodes(const UniformGrid& g) {
  std::vector<double> xs(g.nx);
  for (int i = 0; i < g.nx; ++i) xs[i] = g.x(i);
  return xs;
}

std::vector<double> y_nodes(const UniformGrid& g) {
  std::vector<double> ys(g.ny);
  for (int j = 0; j < g.ny; ++j) ys[j] = g.y(j);
  return ys;
}

WeightSet build_weight_set(const UniformGrid& g) {
  WeightSet w;
  w.w1x = first_order_weights(g.nx, g.dx);
  w.w2x = shu_second_order(w.w1x, x_nodes(g));
  w.w1y = first_order_weights(g.ny, g.dy);
  w.w2y = shu_second_order(w.w1y, y_nodes(g));
  return w;
}

void apply_weights_x_into(const Matrix& w, const Field& f, Field& out) {
  if (&out == &f) throw std::invalid_argument("apply_weights_x: output must not alias input");
  const UniformGrid& g = f.grid();
  if (w.rows != g.nx || w.cols != g.nx) throw std::invalid_argument("apply_weights_x: dimension mismatch");
  if (!out.grid().same_layout(g)) out = Field(g);
  const int nx = g.nx, ny = g.ny;
  for (int i = 0; i < nx; ++i) {
    double* oi = out.row(i);
    std::fill(oi, oi + ny, 0.0);
    const double* wi = w.row(i);
    for (int k = 0; k < nx; ++k) {
      const double c = wi[k];
      const double* fk = f.row(k);
      for (int j = 0; j < ny; ++j) oi[j] += c * fk[j];
    }
  }
}

void apply_weights_y_into(const Matrix& w, const Field& f, Field& out) {
  if (&out == &f) throw std::invalid_argument("apply_weights_y: output must not alias input");
  const UniformGrid& g = f.grid();
  if (w.rows != g.ny || w.cols != g.ny) throw std::invalid_argument("apply_weights_y: dimension mismatch");
  if (!out.grid().same_layout(g)) out = Field(g);
  const int nx = g.nx, ny = g.ny;
  for (int i = 0; i < nx; ++i) {
    const double* fi = f.row(i);
    double* oi = out.row(i);
    for (int j = 0; j < ny; ++j) {
      const double* wj = w.row(j);
      double s = 0.0;
      for (int k = 0; k < ny; ++k) s += wj[k] * fi[k];
      oi[j] = s;
    }
  }
}

Field apply_weights_x(const Matrix& w, const Field& f) {
  Field out;
  apply_weights_x_into(w, f, out);
  return out;
}

Field apply_weights_y(const Matrix& w, const Field& f) {
  Field out;
  apply_weights_y_into(w, f, out);
  return out;
}

}  // namespace sgdq
