// Command-line front end for the hoburg solver library.  Links only the
// public C API.  Subcommands: simulate, verify, converge, sample.
// Exit codes: 0 ok, 2 usage/config error, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hoburg/hoburg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ConfigError {
  std::string message;
  int line = 0;
};

// ---- signal expressions --------------------------------------------------
// Accepted forms: a number, "A*sin(W t + P)", or "exact-kink".
struct SignalSpec {
  enum class Kind { constant, sine, exact_kink } kind = Kind::constant;
  double value = 0.0;
  double amplitude = 0.0, omega = 0.0, phase = 0.0;

  std::string str() const {
    switch (kind) {
      case Kind::constant:
        return g17(value);
      case Kind::sine:
        return g17(amplitude) + "*sin(" + g17(omega) + " t + " + g17(phase) + ")";
      case Kind::exact_kink:
        return "exact-kink";
    }
    return "";
  }
};

bool parse_double(const std::string& s, double* out) {
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(s.c_str(), &end);
  if (errno != 0 || end == s.c_str() || *end != '\0') return false;
  *out = v;
  return true;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool parse_signal(const std::string& text, SignalSpec* out) {
  std::string s = trim(text);
  if (s == "exact-kink") {
    out->kind = SignalSpec::Kind::exact_kink;
    return true;
  }
  if (parse_double(s, &out->value)) {
    out->kind = SignalSpec::Kind::constant;
    return true;
  }
  // A*sin(W t + P)
  size_t star = s.find("*sin(");
  if (star == std::string::npos || s.back() != ')') return false;
  if (!parse_double(trim(s.substr(0, star)), &out->amplitude)) return false;
  std::string inner = s.substr(star + 5, s.size() - star - 6);
  size_t tpos = inner.find(" t ");
  if (tpos == std::string::npos) return false;
  if (!parse_double(trim(inner.substr(0, tpos)), &out->omega)) return false;
  std::string rest = trim(inner.substr(tpos + 3));
  if (rest.empty() || rest[0] != '+') return false;
  if (!parse_double(trim(rest.substr(1)), &out->phase)) return false;
  out->kind = SignalSpec::Kind::sine;
  return true;
}

// ---- run configuration ----------------------------------------------------

struct RunConfig {
  int m = 0;
  double h = 0.0;
  double x_origin = 0.0;
  int order = 1;
  double gamma = 1.0;
  hb_bc_kind bc_left = HB_BC_DIRICHLET_GRIDPOINT;
  hb_bc_kind bc_right = HB_BC_DIRICHLET_GRIDPOINT;
  SignalSpec sig_left, sig_right;
  std::string ic = "constant";
  double ic_u_left = 2.0, ic_u_right = 0.0, ic_x_shock = 0.0;   // kink
  double ic_amplitude = 1.0, ic_wavenumber = 1.0, ic_phase = 0.0;  // sine
  double ic_value = 0.0;                                           // constant
  std::optional<double> dt;  // empty -> auto
  double t0 = 0.0, t1 = 0.0;
  double safety = 0.4;
  int output_every = 1;
  std::string output = "trajectory.csv";
};

const char* kind_name(hb_bc_kind k) {
  return k == HB_BC_DIRICHLET_GRIDPOINT ? "dirichlet" : "neumann";
}

std::string dump_config(const RunConfig& c) {
  std::ostringstream out;
  out << "m = " << c.m << "\n";
  out << "h = " << g17(c.h) << "\n";
  out << "x_origin = " << g17(c.x_origin) << "\n";
  out << "order = " << c.order << "\n";
  out << "gamma = " << g17(c.gamma) << "\n";
  out << "bc_left = " << kind_name(c.bc_left) << "\n";
  out << "bc_left_signal = " << c.sig_left.str() << "\n";
  out << "bc_right = " << kind_name(c.bc_right) << "\n";
  out << "bc_right_signal = " << c.sig_right.str() << "\n";
  out << "ic = " << c.ic << "\n";
  if (c.ic == "kink") {
    out << "ic_u_left = " << g17(c.ic_u_left) << "\n";
    out << "ic_u_right = " << g17(c.ic_u_right) << "\n";
    out << "ic_x_shock = " << g17(c.ic_x_shock) << "\n";
  } else if (c.ic == "sine") {
    out << "ic_amplitude = " << g17(c.ic_amplitude) << "\n";
    out << "ic_wavenumber = " << g17(c.ic_wavenumber) << "\n";
    out << "ic_phase = " << g17(c.ic_phase) << "\n";
  } else {
    out << "ic_value = " << g17(c.ic_value) << "\n";
  }
  out << "dt = " << (c.dt ? g17(*c.dt) : std::string("auto")) << "\n";
  out << "t0 = " << g17(c.t0) << "\n";
  out << "t1 = " << g17(c.t1) << "\n";
  out << "safety = " << g17(c.safety) << "\n";
  out << "output_every = " << c.output_every << "\n";
  out << "output = " << c.output << "\n";
  return out.str();
}

struct RawEntry {
  std::string value;
  int line;
};

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError{"cannot open config file '" + path + "'", 0};

  std::map<std::string, RawEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError{"expected 'key = value'", lineno};
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError{"empty key", lineno};
    if (entries.count(key)) throw ConfigError{"duplicate key '" + key + "'", lineno};
    entries[key] = {value, lineno};
  }

  auto take = [&](const char* key) -> std::optional<RawEntry> {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    RawEntry e = it->second;
    entries.erase(it);
    return e;
  };
  auto require = [&](const char* key) -> RawEntry {
    auto e = take(key);
    if (!e) throw ConfigError{std::string("missing required key '") + key + "'", 0};
    return *e;
  };
  auto as_int = [](const RawEntry& e, const char* key) -> int {
    double v;
    if (!parse_double(e.value, &v) || v != std::floor(v)) {
      throw ConfigError{std::string("key '") + key + "' needs an integer", e.line};
    }
    return static_cast<int>(v);
  };
  auto as_double = [](const RawEntry& e, const char* key) -> double {
    double v;
    if (!parse_double(e.value, &v)) {
      throw ConfigError{std::string("key '") + key + "' needs a number", e.line};
    }
    return v;
  };
  auto as_kind = [](const RawEntry& e, const char* key) -> hb_bc_kind {
    if (e.value == "dirichlet") return HB_BC_DIRICHLET_GRIDPOINT;
    if (e.value == "neumann") return HB_BC_NEUMANN_MIDPOINT;
    throw ConfigError{std::string("key '") + key + "' must be dirichlet or neumann",
                      e.line};
  };
  auto as_signal = [](const RawEntry& e, const char* key) -> SignalSpec {
    SignalSpec s;
    if (!parse_signal(e.value, &s)) {
      throw ConfigError{std::string("key '") + key +
                            "' must be a number, A*sin(W t + P) or exact-kink",
                        e.line};
    }
    return s;
  };

  RunConfig c;
  c.m = as_int(require("m"), "m");
  c.h = as_double(require("h"), "h");
  if (auto e = take("x_origin")) c.x_origin = as_double(*e, "x_origin");
  if (auto e = take("order")) c.order = as_int(*e, "order");
  if (auto e = take("gamma")) c.gamma = as_double(*e, "gamma");
  c.bc_left = as_kind(require("bc_left"), "bc_left");
  c.bc_right = as_kind(require("bc_right"), "bc_right");
  if (auto e = take("bc_left_signal")) c.sig_left = as_signal(*e, "bc_left_signal");
  if (auto e = take("bc_right_signal")) c.sig_right = as_signal(*e, "bc_right_signal");
  RawEntry ic = require("ic");
  if (ic.value != "kink" && ic.value != "sine" && ic.value != "constant") {
    throw ConfigError{"ic must be kink, sine or constant", ic.line};
  }
  c.ic = ic.value;
  if (auto e = take("ic_u_left")) c.ic_u_left = as_double(*e, "ic_u_left");
  if (auto e = take("ic_u_right")) c.ic_u_right = as_double(*e, "ic_u_right");
  if (auto e = take("ic_x_shock")) c.ic_x_shock = as_double(*e, "ic_x_shock");
  if (auto e = take("ic_amplitude")) c.ic_amplitude = as_double(*e, "ic_amplitude");
  if (auto e = take("ic_wavenumber")) c.ic_wavenumber = as_double(*e, "ic_wavenumber");
  if (auto e = take("ic_phase")) c.ic_phase = as_double(*e, "ic_phase");
  if (auto e = take("ic_value")) c.ic_value = as_double(*e, "ic_value");
  if (auto e = take("dt")) {
    if (e->value != "auto") {
      double v = as_double(*e, "dt");
      if (v <= 0.0) throw ConfigError{"dt must be positive or auto", e->line};
      c.dt = v;
    }
  }
  if (auto e = take("t0")) c.t0 = as_double(*e, "t0");
  c.t1 = as_double(require("t1"), "t1");
  if (auto e = take("safety")) c.safety = as_double(*e, "safety");
  if (auto e = take("output_every")) c.output_every = as_int(*e, "output_every");
  if (auto e = take("output")) c.output = e->value;

  if (!entries.empty()) {
    const auto& [key, entry] = *entries.begin();
    throw ConfigError{"unknown key '" + key + "'", entry.line};
  }
  if ((c.sig_left.kind == SignalSpec::Kind::exact_kink ||
       c.sig_right.kind == SignalSpec::Kind::exact_kink) &&
      c.ic != "kink") {
    throw ConfigError{"exact-kink signals need ic = kink", 0};
  }
  return c;
}

// ---- building blocks on top of the C API ----------------------------------

struct SignalHandle {
  hb_signal* ptr = nullptr;
  ~SignalHandle() { hb_signal_free(ptr); }
};

struct OperatorHandle {
  hb_operator* ptr = nullptr;
  ~OperatorHandle() { hb_operator_free(ptr); }
};

struct TrajectoryHandle {
  hb_trajectory* ptr = nullptr;
  ~TrajectoryHandle() { hb_trajectory_free(ptr); }
};

hb_signal* make_signal(const RunConfig& c, const SignalSpec& spec, hb_bc_kind kind,
                       int side) {
  switch (spec.kind) {
    case SignalSpec::Kind::constant:
      return hb_signal_constant(spec.value);
    case SignalSpec::Kind::sine:
      return hb_signal_sine(spec.amplitude, spec.omega, spec.phase);
    case SignalSpec::Kind::exact_kink: {
      double x = hb_boundary_coordinate(kind, side, c.m, c.h, c.x_origin);
      if (kind == HB_BC_DIRICHLET_GRIDPOINT) {
        return hb_signal_kink_value(c.ic_u_left, c.ic_u_right, c.ic_x_shock, x);
      }
      return hb_signal_kink_flux(c.ic_u_left, c.ic_u_right, c.ic_x_shock, x);
    }
  }
  return nullptr;
}

double initial_value(const RunConfig& c, double x) {
  if (c.ic == "kink") {
    return hb_kink_solution(x, c.t0, c.ic_u_left, c.ic_u_right, c.ic_x_shock);
  }
  if (c.ic == "sine") {
    return c.ic_amplitude * std::sin(c.ic_wavenumber * x + c.ic_phase);
  }
  return c.ic_value;
}

int fail_with(hb_status status, const char* what) {
  std::fprintf(stderr, "hoburg: %s: %s\n", what, hb_last_error());
  return status == HB_ERROR_BLOWUP ? kExitNumerical : kExitConfig;
}

int run_problem(const RunConfig& c, OperatorHandle* op, TrajectoryHandle* traj) {
  SignalHandle left{make_signal(c, c.sig_left, c.bc_left, -1)};
  SignalHandle right{make_signal(c, c.sig_right, c.bc_right, +1)};
  if (!left.ptr || !right.ptr) return fail_with(HB_ERROR_INVALID_ARGUMENT, "signal");

  hb_status st = hb_operator_create(c.m, c.h, c.x_origin, c.order, c.gamma, c.bc_left,
                                    left.ptr, c.bc_right, right.ptr, &op->ptr);
  if (st != HB_OK) return fail_with(st, "operator");

  std::vector<double> u0(static_cast<size_t>(c.m));
  for (int j = 0; j < c.m; ++j) u0[j] = initial_value(c, c.x_origin + j * c.h);

  st = hb_integrate(op->ptr, u0.data(), c.m, c.t0, c.t1, c.dt ? *c.dt : 0.0, c.safety,
                    c.output_every, &traj->ptr);
  if (st != HB_OK) return fail_with(st, "integration");
  if (hb_trajectory_stability_warning(traj->ptr)) {
    std::fprintf(stderr, "hoburg: warning: step size exceeds the stability bound\n");
  }
  return kExitOk;
}

// ---- subcommands -----------------------------------------------------------

int cmd_simulate(const std::string& config_path, const std::string& dump_path) {
  RunConfig c;
  try {
    c = parse_config(config_path);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "hoburg: %s:%d: %s\n", config_path.c_str(), e.line,
                 e.message.c_str());
    return kExitConfig;
  }
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) {
      std::fprintf(stderr, "hoburg: cannot write '%s'\n", dump_path.c_str());
      return kExitConfig;
    }
    out << dump_config(c);
    return kExitOk;
  }

  OperatorHandle op;
  TrajectoryHandle traj;
  if (int rc = run_problem(c, &op, &traj); rc != kExitOk) return rc;

  std::ofstream out(c.output);
  if (!out) {
    std::fprintf(stderr, "hoburg: cannot write '%s'\n", c.output.c_str());
    return kExitConfig;
  }
  if (c.bc_left == HB_BC_NEUMANN_MIDPOINT || c.bc_right == HB_BC_NEUMANN_MIDPOINT) {
    out << "# neumann signals are the physical flux du/dx; the solver scales "
           "them by h internally\n";
  }
  out << "t";
  for (int j = 1; j <= c.m; ++j) out << ",u_" << j;
  out << "\n";
  const int rows = hb_trajectory_rows(traj.ptr);
  std::vector<double> state(static_cast<size_t>(c.m));
  for (int r = 0; r < rows; ++r) {
    hb_trajectory_state(traj.ptr, r, state.data(), c.m);
    out << g17(hb_trajectory_time(traj.ptr, r));
    for (int j = 0; j < c.m; ++j) out << "," << g17(state[j]);
    out << "\n";
  }
  return kExitOk;
}

int cmd_verify() {
  int total = 0, failures = 0;
  for (int p = 1; p <= 3; ++p) {
    char* report = nullptr;
    int checks = 0, failed = 0;
    hb_status st = hb_verify_structural(p, &report, &checks, &failed);
    if (st != HB_OK) return fail_with(st, "verify");
    std::fputs(report, stdout);
    hb_string_free(report);
    total += checks;
    failures += failed;
  }
  std::printf("identities checked: %d, failures: %d\n", total, failures);
  return failures == 0 ? kExitOk : 1;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v;
    if (!parse_double(trim(item), &v) || v != std::floor(v)) {
      throw ConfigError{std::string("bad ") + what + " list entry '" + item + "'", 0};
    }
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw ConfigError{std::string("empty ") + what + " list", 0};
  return out;
}

int cmd_converge(const std::string& problem, const std::string& bc,
                 const std::string& orders_text, const std::string& grids_text,
                 double t_end, double u_left, double u_right, double x_shock,
                 double x_left, double length, const std::string& output) {
  if (problem != "kink") {
    std::fprintf(stderr, "hoburg: unknown problem '%s' (supported: kink)\n",
                 problem.c_str());
    return kExitConfig;
  }
  hb_bc_kind kind;
  if (bc == "dirichlet") {
    kind = HB_BC_DIRICHLET_GRIDPOINT;
  } else if (bc == "neumann") {
    kind = HB_BC_NEUMANN_MIDPOINT;
  } else {
    std::fprintf(stderr, "hoburg: --bc must be dirichlet or neumann\n");
    return kExitConfig;
  }
  std::vector<int> orders, grids;
  try {
    orders = parse_int_list(orders_text, "orders");
    grids = parse_int_list(grids_text, "grids");
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "hoburg: %s\n", e.message.c_str());
    return kExitConfig;
  }
  if (grids.size() < 3) {
    std::fprintf(stderr,
                 "hoburg: warning: fewer than 3 grids; no order will be fitted\n");
  }

  char* csv = nullptr;
  char* summary = nullptr;
  hb_status st = hb_convergence_study(kind, orders.data(),
                                      static_cast<int>(orders.size()), grids.data(),
                                      static_cast<int>(grids.size()), u_left, u_right,
                                      x_shock, x_left, length, t_end, &csv, &summary);
  if (st != HB_OK) return fail_with(st, "convergence study");
  std::fputs(summary, stdout);
  std::ofstream out(output);
  if (!out) {
    std::fprintf(stderr, "hoburg: cannot write '%s'\n", output.c_str());
    hb_string_free(csv);
    hb_string_free(summary);
    return kExitConfig;
  }
  out << csv;
  hb_string_free(csv);
  hb_string_free(summary);
  return kExitOk;
}

int cmd_sample(const std::string& config_path, int time_index, int resolution,
               const std::string& output) {
  if (resolution < 1) {
    std::fprintf(stderr, "hoburg: --resolution must be >= 1\n");
    return kExitConfig;
  }
  RunConfig c;
  try {
    c = parse_config(config_path);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "hoburg: %s:%d: %s\n", config_path.c_str(), e.line,
                 e.message.c_str());
    return kExitConfig;
  }
  OperatorHandle op;
  TrajectoryHandle traj;
  if (int rc = run_problem(c, &op, &traj); rc != kExitOk) return rc;

  const int rows = hb_trajectory_rows(traj.ptr);
  if (time_index < 0 || time_index >= rows) {
    std::fprintf(stderr, "hoburg: time index %d out of range (0..%d)\n", time_index,
                 rows - 1);
    return kExitConfig;
  }
  std::vector<double> state(static_cast<size_t>(c.m));
  hb_trajectory_state(traj.ptr, time_index, state.data(), c.m);

  std::ofstream out(output);
  if (!out) {
    std::fprintf(stderr, "hoburg: cannot write '%s'\n", output.c_str());
    return kExitConfig;
  }
  out << "x,v,approx\n";
  for (int j = 1; j <= c.m; ++j) {
    const bool approx = j <= 3 || j > c.m - 3;
    for (int i = 0; i < resolution; ++i) {
      double xi = resolution == 1 ? 0.0 : -0.5 + (i + 0.5) / resolution;
      double v = 0.0;
      hb_status st = hb_operator_subgrid_sample(op.ptr, state.data(), c.m, j, xi, &v);
      if (st != HB_OK) return fail_with(st, "subgrid sample");
      double x = c.x_origin + (j - 1) * c.h + xi * c.h;
      out << g17(x) << "," << g17(v) << "," << (approx ? 1 : 0) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holistic finite-difference solver for Burgers' equation"};
  app.require_subcommand(1);

  std::string config_path, dump_path;
  auto* simulate = app.add_subcommand("simulate", "integrate a configured problem");
  simulate->add_option("--config", config_path, "config file (key = value)")
      ->required();
  simulate->add_option("--dump-config", dump_path,
                       "write the normalized configuration and exit");

  app.add_subcommand("verify", "run the structural identity suite");

  std::string problem = "kink", bc = "dirichlet", orders = "1,2",
              grids = "16,32,64", report_path = "convergence.csv";
  double t_end = 1.0, u_left = 2.0, u_right = 0.0, x_shock = 0.5, x_left = -4.0,
         length = 8.0;
  auto* converge = app.add_subcommand("converge", "grid refinement study");
  converge->add_option("--problem", problem, "benchmark problem name");
  converge->add_option("--bc", bc, "boundary kind: dirichlet | neumann");
  converge->add_option("--orders", orders, "comma-separated truncation orders");
  converge->add_option("--grids", grids, "comma-separated grid sizes");
  converge->add_option("--T", t_end, "final time");
  converge->add_option("--u-left", u_left, "kink upstream state");
  converge->add_option("--u-right", u_right, "kink downstream state");
  converge->add_option("--x-shock", x_shock, "initial shock centre");
  converge->add_option("--x-left", x_left, "left boundary coordinate");
  converge->add_option("--length", length, "domain length");
  converge->add_option("--output", report_path, "CSV report path");

  std::string sample_config, sample_out = "samples.csv";
  int time_index = 0, resolution = 4;
  auto* sample = app.add_subcommand("sample", "subgrid field reconstruction");
  sample->add_option("--config", sample_config, "config file")->required();
  sample->add_option("--time-index", time_index, "captured trajectory row");
  sample->add_option("--resolution", resolution, "samples per element");
  sample->add_option("--output", sample_out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  if (simulate->parsed()) return cmd_simulate(config_path, dump_path);
  if (app.got_subcommand("verify")) return cmd_verify();
  if (converge->parsed()) {
    return cmd_converge(problem, bc, orders, grids, t_end, u_left, u_right, x_shock,
                        x_left, length, report_path);
  }
  if (sample->parsed()) {
    return cmd_sample(sample_config, time_index, resolution, sample_out);
  }
  return kExitConfig;
}
