#include "sgdq/sine_gordon_rhs.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sgdq {

namespace {
constexpr double kSingularFloor = 1e-14;

// dvdt = W2x u + W2y u - phi .* sin(u) - beta v; dudt = v.
void rhs_core(const Field& u, const Field& v, const Field& phi, double beta, const Matrix& w2x,
              const Matrix& w2y, Field& dudt, Field& dvdt) {
  dudt = v;
  apply_weights_x_into(w2x, u, dvdt);
  const UniformGrid& g = u.grid();
  for (int i = 0; i < g.nx; ++i) {
    const double* ui = u.row(i);
    const double* vi = v.row(i);
    const double* pi = phi.row(i);
    double* oi = dvdt.row(i);
    for (int j = 0; j < g.ny; ++j) {
      const double* wj = w2y.row(j);
      double s = 0.0;
      for (int k = 0; k < g.ny; ++k) s += wj[k] * ui[k];
      oi[j] += s - pi[j] * std::sin(ui[j]) - beta * vi[j];
    }
  }
}

// Gaussian elimination with partial pivoting for the small stencil systems.
std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (std::abs(a[p][c]) < kSingularFloor)
      throw std::runtime_error("flux-anchored row: singular stencil system");
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    for (int r = c + 1; r < n; ++r) {
      const double m = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= m * a[c][k];
      b[r] -= m * b[c];
    }
  }
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int k = r + 1; k < n; ++k) s -= a[r][k] * x[static_cast<std::size_t>(k)];
    x[static_cast<std::size_t>(r)] = s / a[r][r];
  }
  return x;
}

// Second-derivative row at node `eval` from values at nodes 0..p-1 plus the
// first derivative at node 0 as one extra datum; exact on degree <= p.
// Returns the p value weights; flux_weight receives the datum coefficient.
std::vector<double> flux_anchored_row(int p, int eval, double h, double& flux_weight) {
  const int n = p + 1;
  std::vector<std::vector<double>> a(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n)));
  std::vector<double> b(static_cast<std::size_t>(n), 0.0);
  for (int pw = 0; pw < n; ++pw) {
    for (int k = 0; k < p; ++k) a[pw][k] = std::pow((k - eval) * h, pw);
    a[pw][p] = pw == 0 ? 0.0 : pw * std::pow((0 - eval) * h, pw - 1);
    if (pw == 2) b[pw] = 2.0;
  }
  std::vector<double> w = solve_dense(std::move(a), std::move(b));
  flux_weight = w[static_cast<std::size_t>(p)];
  w.resize(static_cast<std::size_t>(p));
  return w;
}

// Replace the rows nearest both ends of w2 with flux-anchored stencils (row r
// pairs with its mirror; a row is only replaced while distinct from its
// mirror).  Diagonals are re-set to the negated off-diagonal sum in ascending
// column order, so every row still annihilates constants exactly.  Returns
// the number of anchored row pairs; gw[r] is the datum weight of row r, and
// the mirror row carries -gw[r].
int anchor_face_rows(Matrix& w2, int n, double h, std::array<double, 3>& gw) {
  int count = 0;
  for (int r = 0; r < 3 && r < n - 1 - r; ++r) {
    const int width = std::min(r == 2 ? 7 : 6, n);
    const std::vector<double> vw = flux_anchored_row(width, r, h, gw[static_cast<std::size_t>(r)]);
    const int rr = n - 1 - r;
    for (int k = 0; k < n; ++k) w2(r, k) = 0.0;
    for (int k = 0; k < width; ++k) w2(r, k) = vw[static_cast<std::size_t>(k)];
    for (int k = 0; k < n; ++k) w2(rr, k) = 0.0;
    for (int k = 0; k < width; ++k) w2(rr, n - 1 - k) = vw[static_cast<std::size_t>(k)];
    for (int row : {r, rr}) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        if (k != row) s += w2(row, k);
      w2(row, row) = -s;
    }
    ++count;
  }
  return count;
}
}  // namespace

BoundaryData BoundaryData::homogeneous() {
  auto zero = [](double, double) { return 0.0; };
  return BoundaryData{zero, zero, zero, zero};
}

void enforce_neumann_inplace(Field& u, const WeightSet& w, const BoundaryData& bd, double t) {
  const UniformGrid& g = u.grid();
  const int nx = g.nx, ny = g.ny;
  if (w.w1x.rows != nx || w.w1x.cols != nx || w.w1y.rows != ny || w.w1y.cols != ny)
    throw std::invalid_argument("enforce_neumann: weight/grid size mismatch");
  if (!bd.left || !bd.right || !bd.bottom || !bd.top)
    throw std::invalid_argument("enforce_neumann: missing boundary function");

  const Matrix& wx = w.w1x;
  const double den_x = wx(0, nx - 1) * wx(nx - 1, 0) - wx(0, 0) * wx(nx - 1, nx - 1);
  if (std::abs(den_x) < kSingularFloor)
    throw std::runtime_error("enforce_neumann: singular boundary system in x");

  for (int j = 0; j < ny; ++j) {
    double s1 = 0.0, s2 = 0.0;
    for (int k = 1; k < nx - 1; ++k) {
      s1 += wx(0, k) * u(k, j);
      s2 += wx(nx - 1, k) * u(k, j);
    }
    const double r1 = bd.left(g.y(j), t) - s1;
    const double r2 = bd.right(g.y(j), t) - s2;
    u(0, j) = (wx(0, nx - 1) * r2 - wx(nx - 1, nx - 1) * r1) / den_x;
    u(nx - 1, j) = (wx(nx - 1, 0) * r1 - wx(0, 0) * r2) / den_x;
  }

  const Matrix& wy = w.w1y;
  const double den_y = wy(0, ny - 1) * wy(ny - 1, 0) - wy(0, 0) * wy(ny - 1, ny - 1);
  if (std::abs(den_y) < kSingularFloor)
    throw std::runtime_error("enforce_neumann: singular boundary system in y");

  for (int i = 0; i < nx; ++i) {
    const double* ui = u.row(i);
    double s3 = 0.0, s4 = 0.0;
    for (int k = 1; k < ny - 1; ++k) {
      s3 += wy(0, k) * ui[k];
      s4 += wy(ny - 1, k) * ui[k];
    }
    const double r3 = bd.bottom(g.x(i), t) - s3;
    const double r4 = bd.top(g.x(i), t) - s4;
    u(i, 0) = (wy(0, ny - 1) * r4 - wy(ny - 1, ny - 1) * r3) / den_y;
    u(i, ny - 1) = (wy(ny - 1, 0) * r3 - wy(0, 0) * r4) / den_y;
  }
}

Field enforce_neumann(const Field& u, const WeightSet& w, const BoundaryData& bd, double t) {
  Field out = u;
  enforce_neumann_inplace(out, w, bd, t);
  return out;
}

std::pair<Field, Field> evaluate_rhs(const Field& u, const Field& v, const PdeParams& p,
                                     const WeightSet& w) {
  if (!u.grid().same_layout(v.grid())) throw std::invalid_argument("evaluate_rhs: u/v grid mismatch");
  if (!p.phi) throw std::invalid_argument("evaluate_rhs: phi must be set");
  const Field phi = sample(u.grid(), p.phi);
  Field dudt, dvdt;
  rhs_core(u, v, phi, p.beta, w.w2x, w.w2y, dudt, dvdt);
  if (!all_finite(dvdt) || !all_finite(dudt))
    throw std::runtime_error("evaluate_rhs: non-finite result");
  return {std::move(dudt), std::move(dvdt)};
}

SineGordonOperator::SineGordonOperator(const UniformGrid& grid, WeightSet weights,
                                       const PdeParams& params, BoundaryData boundary)
    : grid_(grid),
      weights_(std::move(weights)),
      beta_(params.beta),
      boundary_(std::move(boundary)) {
  if (!params.phi) throw std::invalid_argument("SineGordonOperator: phi must be set");
  if (!(beta_ >= 0.0)) throw std::invalid_argument("SineGordonOperator: beta must be >= 0");
  if (!boundary_.left || !boundary_.right || !boundary_.bottom || !boundary_.top)
    throw std::invalid_argument("SineGordonOperator: missing boundary function");
  phi_values_ = sample(grid_, params.phi);
  lap_x_ = weights_.w2x;
  lap_y_ = weights_.w2y;
  anchored_x_ = anchor_face_rows(lap_x_, grid_.nx, grid_.dx, flux_w_x_);
  anchored_y_ = anchor_face_rows(lap_y_, grid_.ny, grid_.dy, flux_w_y_);
}

void SineGordonOperator::enforce(Field& u, double t) const {
  enforce_neumann_inplace(u, weights_, boundary_, t);
}

void SineGordonOperator::eval(const Field& u, const Field& v, double t, Field& dudt,
                              Field& dvdt) const {
  rhs_core(u, v, phi_values_, beta_, lap_x_, lap_y_, dudt, dvdt);
  const int nx = grid_.nx, ny = grid_.ny;
  for (int r = 0; r < anchored_x_; ++r) {
    const double wr = flux_w_x_[static_cast<std::size_t>(r)];
    for (int j = 0; j < ny; ++j) {
      dvdt(r, j) += wr * boundary_.left(grid_.y(j), t);
      dvdt(nx - 1 - r, j) -= wr * boundary_.right(grid_.y(j), t);
    }
  }
  for (int r = 0; r < anchored_y_; ++r) {
    const double wr = flux_w_y_[static_cast<std::size_t>(r)];
    for (int i = 0; i < nx; ++i) {
      dvdt(i, r) += wr * boundary_.bottom(grid_.x(i), t);
      dvdt(i, ny - 1 - r) -= wr * boundary_.top(grid_.x(i), t);
    }
  }
  if (!all_finite(dvdt)) throw std::runtime_error("sine-Gordon rhs: non-finite result");
}

}  // namespace sgdq
