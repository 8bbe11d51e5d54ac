#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgdq/sine_gordon_rhs.hpp"

namespace sgdq {

enum class Transform { Raw, HalfSine, Both };

std::string transform_name(Transform t);

// A fully specified experiment: domain, coefficients, initial data, boundary
// data, optional closed-form solution, and default run parameters.
struct ScenarioSpec {
  std::string name;
  std::string summary;
  std::vector<std::string> detail;

  double a = 0.0, b = 1.0, c = 0.0, d = 1.0;
  double beta = 0.0;
  double phi_constant = 1.0;

  ScalarFn f1;  // u(x,y,0)
  ScalarFn f2;  // u_t(x,y,0)
  BoundaryData boundary;
  std::optional<std::function<double(double, double, double)>> exact;

  double dt = 0.0;
  double dx = 0.0, dy = 0.0;
  double t_end = 0.0;
  std::vector<double> snapshot_times;
  Transform transform = Transform::HalfSine;
};

std::vector<std::string> builtin_scenario_names();
ScenarioSpec builtin_scenario(const std::string& name);

}  // namespace sgdq
