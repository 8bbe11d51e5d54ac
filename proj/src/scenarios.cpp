#include "sgdq/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace sgdq {

std::string transform_name(Transform t) {
  switch (t) {
    case Transform::Raw:
      return "raw";
    case Transform::HalfSine:
      return "half-sine";
    case Transform::Both:
      return "both";
  }
  throw std::logic_error("transform_name: unknown transform");
}

namespace {

ScenarioSpec line_soliton_exact() {
  ScenarioSpec s;
  s.name = "line-soliton-exact";
  s.summary = "line soliton with closed-form solution and inhomogeneous flux data";
  s.a = -7.0;
  s.b = 7.0;
  s.c = -7.0;
  s.d = 7.0;
  s.beta = 0.0;
  s.f1 = [](double x, double y) { return 4.0 * std::atan(std::exp(x + y)); };
  s.f2 = [](double x, double y) { return -4.0 * std::exp(x + y) / (1.0 + std::exp(2.0 * (x + y))); };
  s.exact = [](double x, double y, double t) { return 4.0 * std::atan(std::exp(x + y - t)); };
  // Coordinate derivative of the closed-form solution; it is symmetric in x
  // and y, so the same expression serves all four faces.
  auto flux = [](double x, double y, double t) {
    return 4.0 * std::exp(x + y + t) / (std::exp(2.0 * t) + std::exp(2.0 * (x + y)));
  };
  s.boundary.left = [flux](double y, double t) { return flux(-7.0, y, t); };
  s.boundary.right = [flux](double y, double t) { return flux(7.0, y, t); };
  s.boundary.bottom = [flux](double x, double t) { return flux(x, -7.0, t); };
  s.boundary.top = [flux](double x, double t) { return flux(x, 7.0, t); };
  s.dt = 0.001;
  s.dx = 0.25;
  s.dy = 0.25;
  s.t_end = 7.0;
  s.snapshot_times = {1.0, 3.0, 5.0, 7.0};
  s.transform = Transform::Raw;
  s.detail = {
      "u(x,y,0)   = 4 atan(exp(x + y))",
      "u_t(x,y,0) = -4 exp(x + y) / (1 + exp(2x + 2y))",
      "boundary   : du/dn = 4 exp(x + y + t) / (exp(2t) + exp(2x + 2y)) on all faces",
      "exact      : u(x,y,t) = 4 atan(exp(x + y - t))",
  };
  return s;
}

ScenarioSpec circular_ring() {
  ScenarioSpec s;
  s.name = "circular-ring";
  s.summary = "circular ring soliton, undamped, zero-flux walls";
  s.a = -7.0;
  s.b = 7.0;
  s.c = -7.0;
  s.d = 7.0;
  s.beta = 0.0;
  s.f1 = [](double x, double y) { return 4.0 * std::atan(std::exp(3.0 - std::sqrt(x * x + y * y))); };
  s.f2 = [](double, double) { return 0.0; };
  s.boundary = BoundaryData::homogeneous();
  s.dt = 0.2;
  s.dx = 0.4;
  s.dy = 0.4;
  s.t_end = 12.6;
  s.snapshot_times = {2.8, 5.6, 8.4, 11.2, 12.6};
  s.transform = Transform::HalfSine;
  s.detail = {
      "u(x,y,0)   = 4 atan(exp(3 - sqrt(x^2 + y^2)))",
      "u_t(x,y,0) = 0",
      "boundary   : du/dn = 0 on all faces",
  };
  return s;
}

ScenarioSpec elliptical_ring() {
  ScenarioSpec s;
  s.name = "elliptical-ring";
  s.summary = "elliptical ring soliton, undamped, zero-flux walls";
  s.a = -7.0;
  s.b = 7.0;
  s.c = -7.0;
  s.d = 7.0;
  s.beta = 0.0;
  s.f1 = [](double x, double y) {
    const double arg = std::sqrt((x - y) * (x - y) / 3.0 + (x + y) * (x + y) / 2.0);
    return 4.0 * std::atan(std::exp(3.0 - arg));
  };
  s.f2 = [](double, double) { return 0.0; };
  s.boundary = BoundaryData::homogeneous();
  s.dt = 0.2;
  s.dx = 0.4;
  s.dy = 0.4;
  s.t_end = 11.2;
  s.snapshot_times = {1.6, 3.2, 4.8, 6.4, 8.0, 9.6, 11.2};
  s.transform = Transform::HalfSine;
  s.detail = {
      "u(x,y,0)   = 4 atan(exp(3 - sqrt((x-y)^2/3 + (x+y)^2/2)))",
      "u_t(x,y,0) = 0",
      "boundary   : du/dn = 0 on all faces",
  };
  return s;
}

ScenarioSpec elliptical_breather() {
  ScenarioSpec s;
  s.name = "elliptical-breather";
  s.summary = "elliptical breather, undamped, zero-flux walls";
  s.a = -7.0;
  s.b = 7.0;
  s.c = -7.0;
  s.d = 7.0;
  s.beta = 0.0;
  s.f1 = [](double x, double y) {
    const double arg = std::sqrt((x - y) * (x - y) / 3.0 + (x + y) * (x + y) / 2.0);
    return 4.0 * std::atan(2.0 / std::cosh(0.866 * arg));
  };
  s.f2 = [](double, double) { return 0.0; };
  s.boundary = BoundaryData::homogeneous();
  s.dt = 0.2;
  s.dx = 0.4;
  s.dy = 0.4;
  s.t_end = 15.2;
  s.snapshot_times = {1.6, 8.0, 9.6, 11.2, 12.8, 14.8, 15.2};
  s.transform = Transform::HalfSine;
  s.detail = {
      "u(x,y,0)   = 4 atan(2 sech(0.866 sqrt((x-y)^2/3 + (x+y)^2/2)))",
      "u_t(x,y,0) = 0",
      "boundary   : du/dn = 0 on all faces",
  };
  return s;
}

ScenarioSpec orthogonal_lines() {
  ScenarioSpec s;
  s.name = "orthogonal-lines";
  s.summary = "two orthogonal line solitons, damped";
  s.a = -6.0;
  s.b = 6.0;
  s.c = -6.0;
  s.d = 6.0;
  s.beta = 0.05;
  s.f1 = [](double x, double y) { return 4.0 * std::atan(std::exp(x) + std::exp(y)); };
  s.f2 = [](double, double) { return 0.0; };
  s.boundary = BoundaryData::homogeneous();
  s.dt = 0.001;
  s.dx = 0.4;
  s.dy = 0.4;
  s.t_end = 20.0;
  s.snapshot_times = {1.0, 3.0, 7.0, 10.0, 15.0, 20.0};
  s.transform = Transform::HalfSine;
  s.detail = {
      "u(x,y,0)   = 4 atan(exp(x) + exp(y))",
      "u_t(x,y,0) = 0",
      "boundary   : du/dn = 0 on all faces",
      "damping    : beta = 0.05",
  };
  return s;
}

ScenarioSpec inhomogeneous_line() {
  ScenarioSpec s;
  s.name = "inhomogeneous-line";
  s.summary = "single line soliton from offset initial data, damped";
  s.a = -7.0;
  s.b = 7.0;
  s.c = -7.0;
  s.d = 7.0;
  s.beta = 0.05;
  s.f1 = [](double x, double) { return 4.0 * std::atan(std::exp((x - 3.5) / 0.954)); };
  s.f2 = [](double x, double) { return 0.629 / std::cosh(std::exp((x - 3.5) / 0.954)); };
  s.boundary = BoundaryData::homogeneous();
  s.dt = 0.001;
  s.dx = 14.0 / 30.0;
  s.dy = 14.0 / 30.0;
  s.t_end = 18.0;
  s.snapshot_times = {6.0, 12.0, 18.0};
  s.transform = Transform::HalfSine;
  s.detail = {
      "u(x,y,0)   = 4 atan(exp((x - 3.5) / 0.954))",
      "u_t(x,y,0) = 0.629 sech(exp((x - 3.5) / 0.954))",
      "boundary   : du/dn = 0 on all faces",
      "damping    : beta = 0.05",
  };
  return s;
}

}  // namespace

std::vector<std::string> builtin_scenario_names() {
  return {"line-soliton-exact", "circular-ring",    "elliptical-ring",
          "elliptical-breather", "orthogonal-lines", "inhomogeneous-line"};
}

ScenarioSpec builtin_scenario(const std::string& name) {
  if (name == "line-soliton-exact") return line_soliton_exact();
  if (name == "circular-ring") return circular_ring();
  if (name == "elliptical-ring") return elliptical_ring();
  if (name == "elliptical-breather") return elliptical_breather();
  if (name == "orthogonal-lines") return orthogonal_lines();
  if (name == "inhomogeneous-line") return inhomogeneous_line();
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

}  // namespace sgdq
