#include "sgdq/cli_io.hpp"

#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

namespace sgdq {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

std::vector<double> parse_double_list(const std::string& s, const std::string& where) {
  std::vector<double> out;
  const std::string body = trim(s);
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    if (!parse_double(trim(item), v)) throw ConfigError(where + ": malformed number '" + trim(item) + "'");
    out.push_back(v);
  }
  return out;
}

Transform parse_transform(const std::string& s, const std::string& where) {
  if (s == "raw") return Transform::Raw;
  if (s == "half-sine") return Transform::HalfSine;
  if (s == "both") return Transform::Both;
  throw ConfigError(where + ": transform must be raw, half-sine or both (got '" + s + "')");
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void require_writable(const std::filesystem::path& p, bool overwrite) {
  if (!overwrite && std::filesystem::exists(p))
    throw std::runtime_error("refusing to overwrite existing file " + p.string() +
                             " (pass --overwrite to allow)");
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot open " + p.string() + " for writing");
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const std::string where = "line " + std::to_string(lineno);

    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + ": empty key");
    if (!seen.insert(key).second) throw ConfigError(where + ": duplicate key '" + key + "'");

    auto number = [&](const char* name) {
      double v = 0.0;
      if (!parse_double(val, v))
        throw ConfigError(where + ": malformed number for " + name + " ('" + val + "')");
      return v;
    };

    if (key == "scenario") {
      if (val.empty()) throw ConfigError(where + ": scenario must not be empty");
      cfg.scenario = val;
    } else if (key == "dt") {
      cfg.dt = number("dt");
    } else if (key == "dx") {
      cfg.dx = number("dx");
    } else if (key == "dy") {
      cfg.dy = number("dy");
    } else if (key == "t_end") {
      cfg.t_end = number("t_end");
    } else if (key == "beta") {
      cfg.beta = number("beta");
    } else if (key == "snapshots") {
      cfg.snapshots = parse_double_list(val, where);
    } else if (key == "out_dir") {
      if (val.empty()) throw ConfigError(where + ": out_dir must not be empty");
      cfg.out_dir = val;
    } else if (key == "transform") {
      cfg.transform = parse_transform(val, where);
    } else if (key == "diagnostics") {
      if (val == "true") {
        cfg.diagnostics = true;
      } else if (val == "false") {
        cfg.diagnostics = false;
      } else {
        throw ConfigError(where + ": diagnostics must be true or false (got '" + val + "')");
      }
    } else {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }

  if (cfg.scenario.empty()) throw ConfigError("scenario required");
  if (cfg.dt && !(*cfg.dt > 0.0)) throw ConfigError("constraint violation: dt must be > 0");
  if (cfg.dx && !(*cfg.dx > 0.0)) throw ConfigError("constraint violation: dx must be > 0");
  if (cfg.dy && !(*cfg.dy > 0.0)) throw ConfigError("constraint violation: dy must be > 0");
  if (cfg.t_end && !(*cfg.t_end >= 0.0)) throw ConfigError("constraint violation: t_end must be >= 0");
  if (cfg.beta && !(*cfg.beta >= 0.0)) throw ConfigError("constraint violation: beta must be >= 0");
  if (cfg.snapshots) {
    double prev = 0.0;
    bool first = true;
    for (double t : cfg.snapshots.value()) {
      if (t < 0.0 || (!first && t < prev))
        throw ConfigError("constraint violation: snapshots must be non-negative and ascending");
      prev = t;
      first = false;
    }
  }
  return cfg;
}

Snapshot make_snapshot(const SolverState& state, Transform transform) {
  if (transform == Transform::Both)
    throw std::invalid_argument("make_snapshot: pick raw or half-sine for a single snapshot");
  Snapshot s;
  s.time = state.t;
  s.transform = transform_name(transform);
  s.grid = state.u.grid();
  s.values = state.u.values();
  if (transform == Transform::HalfSine) {
    for (double& v : s.values) v = std::sin(0.5 * v);
  }
  return s;
}

void write_snapshot(const Snapshot& s, const std::filesystem::path& path) {
  if (static_cast<std::size_t>(s.grid.nx) * s.grid.ny != s.values.size())
    throw std::invalid_argument("write_snapshot: value count does not match the grid");
  std::ofstream out = open_out(path);
  char buf[256];
  std::snprintf(buf, sizeof buf, "# t=%.17g transform=%s M=%d N=%d a=%.17g b=%.17g c=%.17g d=%.17g",
                s.time, s.transform.c_str(), s.grid.nx, s.grid.ny, s.grid.a, s.grid.b, s.grid.c,
                s.grid.d);
  out << buf << '\n';
  for (int j = 0; j < s.grid.ny; ++j) {
    for (int i = 0; i < s.grid.nx; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", s.at(i, j));
      if (i > 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
  if (!out.good()) throw std::runtime_error("write failed for " + path.string());
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error(path.string() + ": missing header");

  Snapshot s;
  char transform[64] = {0};
  int nx = 0, ny = 0;
  double a = 0, b = 0, c = 0, d = 0;
  const int got = std::sscanf(header.c_str(), "# t=%lf transform=%63s M=%d N=%d a=%lf b=%lf c=%lf d=%lf",
                              &s.time, transform, &nx, &ny, &a, &b, &c, &d);
  if (got != 8) throw std::runtime_error(path.string() + ": malformed header");
  s.transform = transform;
  s.grid = build_grid(a, b, c, d, nx, ny);
  s.values.assign(static_cast<std::size_t>(nx) * ny, 0.0);

  std::string line;
  for (int j = 0; j < ny; ++j) {
    if (!std::getline(in, line))
      throw std::runtime_error(path.string() + ": truncated at data line " + std::to_string(j + 1));
    const char* p = line.c_str();
    for (int i = 0; i < nx; ++i) {
      char* end = nullptr;
      const double v = std::strtod(p, &end);
      if (end == p)
        throw std::runtime_error(path.string() + ": malformed value at line " + std::to_string(j + 2));
      s.values[static_cast<std::size_t>(i) * ny + j] = v;
      p = end;
    }
  }
  return s;
}

namespace {

int derive_node_count(double lo, double hi, double spacing, const char* axis) {
  const double steps = (hi - lo) / spacing;
  const long n = std::lround(steps);
  if (n < 4 || std::abs(steps - static_cast<double>(n)) > 1e-9 * std::max(1.0, steps))
    throw std::invalid_argument(std::string("run: ") + axis +
                                " spacing does not divide the domain into a node count >= 5");
  return static_cast<int>(n) + 1;
}

std::filesystem::path snapshot_path(const std::filesystem::path& dir, double time,
                                    const std::string& tname) {
  return dir / ("snap_t" + fmt_short(time) + "_" + tname + ".dat");
}

}  // namespace

RunOutcome run(const RunConfig& cfg) {
  ScenarioSpec spec = builtin_scenario(cfg.scenario);
  if (cfg.dt) spec.dt = *cfg.dt;
  if (cfg.dx) spec.dx = *cfg.dx;
  if (cfg.dy) spec.dy = *cfg.dy;
  if (cfg.t_end) spec.t_end = *cfg.t_end;
  if (cfg.beta) spec.beta = *cfg.beta;
  if (cfg.phi_constant) spec.phi_constant = *cfg.phi_constant;
  if (cfg.snapshots) spec.snapshot_times = *cfg.snapshots;
  if (cfg.transform) spec.transform = *cfg.transform;

  if (!(spec.dt > 0.0)) throw std::invalid_argument("run: dt must be > 0");
  if (!(spec.t_end >= 0.0)) throw std::invalid_argument("run: t_end must be >= 0");
  if (!(spec.dx > 0.0) || !(spec.dy > 0.0)) throw std::invalid_argument("run: spacings must be > 0");
  if (!(spec.beta >= 0.0)) throw std::invalid_argument("run: beta must be >= 0");
  for (double ts : spec.snapshot_times) {
    if (ts < 0.0 || ts > spec.t_end + 1e-12)
      throw std::invalid_argument("run: snapshot times must lie in [0, t_end]");
  }

  const int nx = derive_node_count(spec.a, spec.b, spec.dx, "x");
  const int ny = derive_node_count(spec.c, spec.d, spec.dy, "y");
  const UniformGrid grid = build_grid(spec.a, spec.b, spec.c, spec.d, nx, ny);

  const PdeParams params{spec.beta,
                         [pc = spec.phi_constant](double, double) { return pc; }};
  const SineGordonOperator op(grid, build_weight_set(grid), params, spec.boundary);

  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);

  // Export plan: the initial state plus every requested time, in each
  // requested transform.  Refuse collisions up front.
  std::vector<Transform> transforms;
  if (spec.transform == Transform::Both) {
    transforms = {Transform::Raw, Transform::HalfSine};
  } else {
    transforms = {spec.transform};
  }
  std::vector<double> export_times = {0.0};
  for (double ts : spec.snapshot_times) {
    if (ts > 0.0) export_times.push_back(ts);
  }

  RunOutcome out;
  for (double ts : export_times) {
    for (Transform tr : transforms) require_writable(snapshot_path(dir, ts, transform_name(tr)), cfg.overwrite);
  }
  const std::filesystem::path errors_path = dir / "errors.csv";
  const std::filesystem::path diag_path = dir / "diagnostics.csv";
  const std::filesystem::path meta_path = dir / "run_meta.txt";
  if (spec.exact) require_writable(errors_path, cfg.overwrite);
  if (cfg.diagnostics) require_writable(diag_path, cfg.overwrite);
  require_writable(meta_path, cfg.overwrite);

  SolverState state0{0.0, sample(grid, spec.f1), sample(grid, spec.f2)};

  const RhsFn rhs = [&op](const Field& u, const Field& v, double t, Field& du, Field& dv) {
    op.eval(u, v, t, du, dv);
  };
  // The operator's flux-anchored face rows give boundary nodes their own
  // dynamics, so the per-stage closure is the identity.
  const ClosureFn closure = [](Field&, double) {};

  IntegrationResult result = integrate(state0, spec.dt, spec.t_end, spec.snapshot_times, rhs, closure);

  // Assemble the exported states: t = 0 first, then the captured snapshots.
  std::vector<const SolverState*> exported;
  exported.push_back(&state0);
  for (const SolverState& snap : result.snapshots) {
    if (snap.t > 0.0) exported.push_back(&snap);
  }

  for (const SolverState* st : exported) {
    for (Transform tr : transforms) {
      const auto path = snapshot_path(dir, st->t, transform_name(tr));
      write_snapshot(make_snapshot(*st, tr), path);
      out.files.push_back(path);
    }
    if (spec.exact) {
      const auto& exact_fn = *spec.exact;
      const double ts = st->t;
      const Field exact = sample(grid, [&](double x, double y) { return exact_fn(x, y, ts); });
      out.errors.push_back(error_norms(st->u, exact, ts, spec.dt));
    }
    if (cfg.diagnostics) {
      const ScalarFn phi = [pc = spec.phi_constant](double, double) { return pc; };
      out.energies.push_back(discrete_energy(*st, op.weights(), phi));
      out.rings.push_back(ring_radius(st->u, st->t));
    }
  }

  if (spec.exact) {
    std::ofstream e = open_out(errors_path);
    e << "t,l_inf,rms\n";
    for (const ErrorReport& r : out.errors)
      e << fmt10(r.time) << ',' << fmt10(r.l_inf) << ',' << fmt10(r.rms) << '\n';
    if (!e.good()) throw std::runtime_error("write failed for " + errors_path.string());
    out.files.push_back(errors_path);
  }

  if (cfg.diagnostics) {
    std::ofstream dgn = open_out(diag_path);
    dgn << "t,energy,ring_radius\n";
    for (std::size_t k = 0; k < out.energies.size(); ++k) {
      dgn << fmt10(out.energies[k].time) << ',' << fmt10(out.energies[k].energy) << ','
          << fmt10(out.rings[k].radius) << '\n';
    }
    if (!dgn.good()) throw std::runtime_error("write failed for " + diag_path.string());
    out.files.push_back(diag_path);
  }

  {
    std::ofstream meta = open_out(meta_path);
    meta << "scenario=" << spec.name << '\n';
    meta << "tableau=" << ssprk54_tableau().name << '\n';
    meta << "a=" << fmt17(spec.a) << '\n' << "b=" << fmt17(spec.b) << '\n';
    meta << "c=" << fmt17(spec.c) << '\n' << "d=" << fmt17(spec.d) << '\n';
    meta << "nx=" << nx << '\n' << "ny=" << ny << '\n';
    meta << "dx=" << fmt17(grid.dx) << '\n' << "dy=" << fmt17(grid.dy) << '\n';
    meta << "dt=" << fmt17(spec.dt) << '\n' << "t_end=" << fmt17(spec.t_end) << '\n';
    meta << "beta=" << fmt17(spec.beta) << '\n';
    meta << "phi=" << fmt17(spec.phi_constant) << '\n';
    meta << "snapshots=";
    for (std::size_t k = 0; k < spec.snapshot_times.size(); ++k) {
      if (k) meta << ',';
      meta << fmt17(spec.snapshot_times[k]);
    }
    meta << '\n';
    meta << "transform=" << transform_name(spec.transform) << '\n';
    meta << "diagnostics=" << (cfg.diagnostics ? "true" : "false") << '\n';
    meta << "steps=" << result.steps << '\n';
    if (!cfg.omit_timestamp) {
      const auto now = std::chrono::system_clock::now();
      const std::time_t tt = std::chrono::system_clock::to_time_t(now);
      char buf[64];
      std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
      meta << "generated_at=" << buf << '\n';
    }
    if (!meta.good()) throw std::runtime_error("write failed for " + meta_path.string());
    out.files.push_back(meta_path);
  }

  out.final_state = std::move(result.state);
  return out;
}

}  // namespace sgdq
