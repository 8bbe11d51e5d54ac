#pragma once

#include <vector>

#include "sgdq/grid_field.hpp"
#include "sgdq/matrix.hpp"

namespace sgdq {

// Nodal values of the uniform cubic B-spline phi_m and its derivatives.
// offset is the node index relative to the spline center, i.e. the value
// returned is phi_m(x_{m+offset}); everything two or more nodes away is zero.
struct SplineTable {
  double h;

  double value(int offset) const;
  double deriv1(int offset) const;
  double deriv2(int offset) const;
};

// End-modified spline basis evaluated on one grid line: bands of the
// tridiagonal value matrix B[m][k] = psi_m(x_k) and the derivative table
// dpsi(m,k) = psi_m'(x_k) (nonzero only near the diagonal).
struct ModifiedBasis {
  std::vector<double> lower;  // B[m+1][m], size n-1
  std::vector<double> diag;   // B[m][m],   size n
  std::vector<double> upper;  // B[m][m+1], size n-1
  Matrix dpsi;                // n x n
};

ModifiedBasis modified_basis_matrix(int n, double h);

// O(n) tridiagonal LU without pivoting; the factorization is done once and
// can be reused across many right-hand sides.  Pivots below 1e-14 in
// magnitude are rejected.
class TridiagonalFactor {
 public:
  TridiagonalFactor(std::vector<double> lower, std::vector<double> diag, std::vector<double> upper);

  std::vector<double> solve(const std::vector<double>& rhs) const;
  int size() const { return static_cast<int>(pivot_.size()); }

 private:
  std::vector<double> lower_;   // original sub-diagonal
  std::vector<double> pivot_;   // eliminated diagonal
  std::vector<double> cprime_;  // eliminated super-diagonal
};

std::vector<double> thomas_solve(const std::vector<double>& lower, const std::vector<double>& diag,
                                 const std::vector<double>& upper, const std::vector<double>& rhs);

// First-derivative quadrature weights on one axis: row i solves
// B w_i = dpsi(:, i), so sum_k w1(i,k) f(x_k) differentiates the modified
// spline interpolant of f exactly at x_i.
Matrix first_order_weights(int n, double h);

// Order-r weights from order-(r-1) weights via the recurrence
// w_r(i,j) = r * (w1(i,j) w_{r-1}(i,i) - w_{r-1}(i,j)/(x_i - x_j)), with the
// diagonal defined as the negated off-diagonal row sum.
Matrix shu_weights(const Matrix& w1, const Matrix& w_prev, int r, const std::vector<double>& nodes);
Matrix shu_second_order(const Matrix& w1, const std::vector<double>& nodes);

struct WeightSet {
  Matrix w1x, w2x;  // nx x nx
  Matrix w1y, w2y;  // ny x ny
};

WeightSet build_weight_set(const UniformGrid& grid);

// out(i,j) = sum_k w(i,k) f(k,j)
Field apply_weights_x(const Matrix& w, const Field& f);
void apply_weights_x_into(const Matrix& w, const Field& f, Field& out);
// out(i,j) = sum_k w(j,k) f(i,k)
Field apply_weights_y(const Matrix& w, const Field& f);
void apply_weights_y_into(const Matrix& w, const Field& f, Field& out);

std::vector<double> x_nodes(const UniformGrid& grid);
std::vector<double> y_nodes(const UniformGrid& grid);

}  // namespace sgdq
