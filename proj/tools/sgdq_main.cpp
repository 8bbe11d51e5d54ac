#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sgdq/cli_io.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sgdq::ConfigError("cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw sgdq::ConfigError("--snapshots: malformed number '" + item + "'");
    }
  }
  return out;
}

sgdq::Transform parse_transform_flag(const std::string& s) {
  if (s == "raw") return sgdq::Transform::Raw;
  if (s == "half-sine") return sgdq::Transform::HalfSine;
  if (s == "both") return sgdq::Transform::Both;
  throw sgdq::ConfigError("--transform must be raw, half-sine or both");
}

void print_scenario(const sgdq::ScenarioSpec& spec) {
  std::printf("%s\n", spec.name.c_str());
  std::printf("  %s\n", spec.summary.c_str());
  std::printf("  domain     : [%g, %g] x [%g, %g]\n", spec.a, spec.b, spec.c, spec.d);
  for (const std::string& line : spec.detail) std::printf("  %s\n", line.c_str());
  std::printf("  phi        : %g\n", spec.phi_constant);
  std::printf("  defaults   : dt=%g dx=%g dy=%g t_end=%g transform=%s\n", spec.dt, spec.dx, spec.dy,
              spec.t_end, sgdq::transform_name(spec.transform).c_str());
  std::printf("  snapshots  :");
  for (double t : spec.snapshot_times) std::printf(" %g", t);
  std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-D sine-Gordon solver: modified cubic B-spline quadrature in space, SSPRK(5,4) in time"};
  app.require_subcommand(1);

  std::string scenario, config_path, out_dir, transform, snapshots;
  double dt = 0.0, t_end = 0.0;
  bool diagnostics = false, overwrite = false;

  CLI::App* run_cmd = app.add_subcommand("run", "run a scenario and export snapshots and tables");
  CLI::Option* opt_scenario = run_cmd->add_option("--scenario", scenario, "built-in scenario name");
  CLI::Option* opt_config = run_cmd->add_option("--config", config_path, "key=value config file");
  opt_scenario->excludes(opt_config);
  opt_config->excludes(opt_scenario);
  CLI::Option* opt_out = run_cmd->add_option("--out", out_dir, "output directory (created if absent)");
  CLI::Option* opt_dt = run_cmd->add_option("--dt", dt, "time step override");
  CLI::Option* opt_tend = run_cmd->add_option("--t-end", t_end, "final time override");
  CLI::Option* opt_snaps = run_cmd->add_option("--snapshots", snapshots, "comma-separated snapshot times");
  CLI::Option* opt_transform =
      run_cmd->add_option("--transform", transform, "export transform: raw, half-sine or both");
  run_cmd->add_flag("--diagnostics", diagnostics, "also export energy and ring-radius tables");
  run_cmd->add_flag("--overwrite", overwrite, "allow overwriting existing output files");

  CLI::App* list_cmd = app.add_subcommand("list-scenarios", "list the built-in scenarios");

  std::string describe_name;
  CLI::App* describe_cmd = app.add_subcommand("describe", "print a scenario's formulas and defaults");
  describe_cmd->add_option("--scenario", describe_name, "built-in scenario name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (list_cmd->parsed()) {
      for (const std::string& name : sgdq::builtin_scenario_names()) {
        const sgdq::ScenarioSpec spec = sgdq::builtin_scenario(name);
        std::printf("%-20s %s\n", name.c_str(), spec.summary.c_str());
      }
      return 0;
    }

    if (describe_cmd->parsed()) {
      print_scenario(sgdq::builtin_scenario(describe_name));
      return 0;
    }

    sgdq::RunConfig cfg;
    if (opt_config->count() > 0) {
      cfg = sgdq::parse_config(read_file(config_path));
    } else if (opt_scenario->count() > 0) {
      cfg.scenario = scenario;
    } else {
      throw sgdq::ConfigError("run: pass --scenario <name> or --config <path>");
    }
    if (opt_out->count() > 0) cfg.out_dir = out_dir;
    if (opt_dt->count() > 0) cfg.dt = dt;
    if (opt_tend->count() > 0) cfg.t_end = t_end;
    if (opt_snaps->count() > 0) cfg.snapshots = parse_list(snapshots);
    if (opt_transform->count() > 0) cfg.transform = parse_transform_flag(transform);
    if (diagnostics) cfg.diagnostics = true;
    if (overwrite) cfg.overwrite = true;

    const sgdq::RunOutcome outcome = sgdq::run(cfg);

    std::printf("run complete: %s to t=%g\n", cfg.scenario.c_str(), outcome.final_state.t);
    for (const sgdq::ErrorReport& r : outcome.errors)
      std::printf("  t=%-6g L_inf=%.6e rms=%.6e\n", r.time, r.l_inf, r.rms);
    std::printf("wrote %zu file(s) under %s\n", outcome.files.size(), cfg.out_dir.c_str());
    return 0;
  } catch (const sgdq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const sgdq::SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
