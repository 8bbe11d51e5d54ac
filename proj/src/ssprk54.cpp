#include "sgdq/ssprk54.hpp"

#include <cmath>
#include <utility>

namespace sgdq {

namespace {

void axpy(Field& y, double a, const Field& x) {
  const std::size_t n = y.values().size();
  double* yp = y.values().data();
  const double* xp = x.values().data();
  for (std::size_t i = 0; i < n; ++i) yp[i] += a * xp[i];
}

std::string format_time(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", t);
  return buf;
}

}  // namespace

const RKTableau& ssprk54_tableau() {
  static const RKTableau tab = [] {
    RKTableau t;
    t.name = "SSPRK(5,4)";
    t.stages = 5;
    t.state_weights[0][0] = 1.0;
    t.slope_weights[0][0] = 0.391752226571890;
    t.state_weights[1][0] = 0.444370493651235;
    t.state_weights[1][1] = 0.555629506348765;
    t.slope_weights[1][1] = 0.368410593050371;
    t.state_weights[2][0] = 0.620101851488403;
    t.state_weights[2][2] = 0.379898148511597;
    t.slope_weights[2][2] = 0.251891774271694;
    t.state_weights[3][0] = 0.178079954393132;
    t.state_weights[3][3] = 0.821920045606868;
    t.slope_weights[3][3] = 0.544974750228521;
    t.state_weights[4][2] = 0.517231671970585;
    t.state_weights[4][3] = 0.096059710526147;
    t.state_weights[4][4] = 0.386708617503269;
    t.slope_weights[4][3] = 0.063692468666290;
    t.slope_weights[4][4] = 0.226007483236906;
    t.abscissae[0] = 0.0;
    for (int s = 1; s <= 5; ++s) {
      double c = 0.0;
      for (int k = 0; k < s; ++k)
        c += t.state_weights[s - 1][k] * t.abscissae[k] + t.slope_weights[s - 1][k];
      t.abscissae[s] = c;
    }
    return t;
  }();
  return tab;
}

SolverError::SolverError(const std::string& what, double time, int stage)
    : std::runtime_error("solver failure at t=" + format_time(time) + ", stage " +
                         std::to_string(stage) + ": " + what),
      time_(time),
      stage_(stage) {}

SolverState step(const SolverState& state, double dt, const RhsFn& rhs, const ClosureFn& closure) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  if (!rhs || !closure) throw std::invalid_argument("step: rhs and closure must be set");
  const RKTableau& tab = ssprk54_tableau();
  const UniformGrid& g = state.u.grid();
  const double t0 = state.t;

  std::array<std::pair<Field, Field>, 6> s;  // stage states (u, v)
  std::array<std::pair<Field, Field>, 5> f;  // stage slopes
  s[0] = {state.u, state.v};

  for (int k = 0; k < tab.stages; ++k) {
    const double tk = t0 + tab.abscissae[k] * dt;
    closure(s[k].first, tk);
    f[k] = {Field(g), Field(g)};
    rhs(s[k].first, s[k].second, tk, f[k].first, f[k].second);

    Field un(g), vn(g);
    for (int m = 0; m <= k; ++m) {
      const double a = tab.state_weights[k][m];
      if (a != 0.0) {
        axpy(un, a, s[m].first);
        axpy(vn, a, s[m].second);
      }
      const double bdt = tab.slope_weights[k][m] * dt;
      if (bdt != 0.0) {
        axpy(un, bdt, f[m].first);
        axpy(vn, bdt, f[m].second);
      }
    }
    s[k + 1] = {std::move(un), std::move(vn)};
    if (!all_finite(s[k + 1].first) || !all_finite(s[k + 1].second))
      throw SolverError("non-finite stage state", t0, k + 1);
  }

  closure(s[5].first, t0 + dt);
  return SolverState{t0 + dt, std::move(s[5].first), std::move(s[5].second)};
}

IntegrationResult integrate(const SolverState& state, double dt, double t_end,
                            const std::vector<double>& snapshot_times, const RhsFn& rhs,
                            const ClosureFn& closure) {
  const double t0 = state.t;
  const double span = t_end - t0;
  if (span < 0.0) throw std::invalid_argument("integrate: t_end must not precede the initial time");

  long n = 0;
  if (span > 0.0) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
    n = std::lround(span / dt);
    if (n < 1 || std::abs(t0 + static_cast<double>(n) * dt - t_end) > 1e-9 * std::max(1.0, std::abs(span)))
      throw std::invalid_argument("integrate: t_end - t0 must be an integer multiple of dt");
  }

  // Map each snapshot time onto a step index.
  std::vector<std::pair<long, double>> marks;
  marks.reserve(snapshot_times.size());
  double prev = t0;
  for (double ts : snapshot_times) {
    if (ts < prev) throw std::invalid_argument("integrate: snapshot times must be sorted ascending");
    prev = ts;
    long k = 0;
    if (span > 0.0) {
      k = std::lround((ts - t0) / dt);
      if (k < 0 || k > n || std::abs(t0 + static_cast<double>(k) * dt - ts) > 1e-9 * std::max(1.0, std::abs(ts - t0)))
        throw std::invalid_argument("integrate: snapshot times must be step multiples inside [t0, t_end]");
    } else if (std::abs(ts - t0) > 1e-9) {
      throw std::invalid_argument("integrate: snapshot times must be step multiples inside [t0, t_end]");
    }
    marks.emplace_back(k, ts);
  }

  IntegrationResult res;
  res.state = state;
  res.steps = n;

  std::size_t next = 0;
  auto capture = [&](long k) {
    while (next < marks.size() && marks[next].first == k) {
      SolverState snap = res.state;
      snap.t = marks[next].second;  // stamp with the requested time
      res.snapshots.push_back(std::move(snap));
      ++next;
    }
  };

  capture(0);
  for (long i = 1; i <= n; ++i) {
    res.state = step(res.state, dt, rhs, closure);
    res.state.t = t0 + static_cast<double>(i) * dt;
    capture(i);
  }
  return res;
}

}  // namespace sgdq
