#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgdq/grid_field.hpp"

namespace sgdq {

// Five-stage fourth-order strong-stability-preserving Runge-Kutta scheme in
// convex (Shu-Osher) form.  Stage s+1 is built as
//   y_{s+1} = sum_k state_weights[s][k] y_k + dt * sum_k slope_weights[s][k] F(y_k)
// with nonnegative weights; state weights of each stage sum to one.
struct RKTableau {
  std::string name;
  int stages = 0;
  std::array<std::array<double, 5>, 5> state_weights{};
  std::array<std::array<double, 5>, 5> slope_weights{};
  // Effective evaluation time of stage s is t + abscissae[s]*dt; the last
  // entry belongs to the completed step and equals 1.
  std::array<double, 6> abscissae{};
};

const RKTableau& ssprk54_tableau();

struct SolverState {
  double t = 0.0;
  Field u, v;
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double time, int stage);

  double time() const { return time_; }
  int stage() const { return stage_; }

 private:
  double time_;
  int stage_;
};

using RhsFn = std::function<void(const Field& u, const Field& v, double t, Field& dudt, Field& dvdt)>;
using ClosureFn = std::function<void(Field& u, double t)>;

// One SSPRK(5,4) step.  The closure is applied to each stage's u component at
// that stage's effective time before the slope evaluation, and once more to
// the completed state at t + dt.  Non-finite values abort with the stage index.
SolverState step(const SolverState& state, double dt, const RhsFn& rhs, const ClosureFn& closure);

struct IntegrationResult {
  SolverState state;
  std::vector<SolverState> snapshots;
  long steps = 0;
};

// Fixed-step integration from state.t to t_end.  Snapshot times must be
// sorted and land on step boundaries (integer multiples of dt within 1e-9);
// captured states are stamped with the requested times, never interpolated.
IntegrationResult integrate(const SolverState& state, double dt, double t_end,
                            const std::vector<double>& snapshot_times, const RhsFn& rhs,
                            const ClosureFn& closure);

}  // namespace sgdq
