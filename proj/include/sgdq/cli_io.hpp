#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgdq/diagnostics.hpp"
#include "sgdq/scenarios.hpp"
#include "sgdq/ssprk54.hpp"

namespace sgdq {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A resolved request: scenario name plus optional overrides.  Fields left
// empty fall back to the scenario defaults.
struct RunConfig {
  std::string scenario;
  std::optional<double> dt, dx, dy, t_end, beta, phi_constant;
  std::optional<std::vector<double>> snapshots;
  std::optional<Transform> transform;
  std::string out_dir = ".";
  bool diagnostics = false;
  bool overwrite = false;
  bool omit_timestamp = false;  // keeps run_meta.txt byte-reproducible
};

// Parses flat key=value text.  Keys: scenario, dt, dx, dy, t_end, snapshots,
// beta, out_dir, transform, diagnostics.  '#' lines and blank lines are
// skipped; unknown or duplicate keys and malformed values are errors carrying
// the line number.
RunConfig parse_config(const std::string& text);

// One exported field: metadata header plus an ny-line table of nx values.
struct Snapshot {
  double time = 0.0;
  std::string transform;  // "raw" or "half-sine"
  UniformGrid grid;
  std::vector<double> values;  // i-major, like Field

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.ny + j]; }
};

Snapshot make_snapshot(const SolverState& state, Transform transform);

// Values are written with 17 significant digits, so write/read round-trips
// are bit-exact.
void write_snapshot(const Snapshot& s, const std::filesystem::path& path);
Snapshot read_snapshot(const std::filesystem::path& path);

struct RunOutcome {
  SolverState final_state;
  std::vector<ErrorReport> errors;        // empty when the scenario has no exact solution
  std::vector<EnergyDiagnostic> energies; // empty unless diagnostics requested
  std::vector<RingDiagnostic> rings;
  std::vector<std::filesystem::path> files;
};

// Executes a scenario run end to end: grid and weights, sampling, time
// integration, snapshot/error/diagnostic export, and a run_meta.txt with the
// effective parameters.  Existing files are refused unless cfg.overwrite.
RunOutcome run(const RunConfig& cfg);

}  // namespace sgdq
