#include "hoburg/hoburg.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "assembly.hpp"
#include "integrate.hpp"
#include "interior.hpp"
#include "kink.hpp"
#include "oracles.hpp"
#include "signals.hpp"
#include "structural.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : "unknown error"; }

template <typename F>
hb_status guarded(F&& f) {
  try {
    return f();
  } catch (const hoburg::BlowupError& e) {
    set_error(e.what());
    return HB_ERROR_BLOWUP;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return HB_ERROR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    set_error(e.what());
    return HB_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return HB_ERROR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return HB_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hoburg::BoundaryKind to_kind(hb_bc_kind k) {
  return k == HB_BC_DIRICHLET_GRIDPOINT ? hoburg::BoundaryKind::dirichlet_gridpoint
                                        : hoburg::BoundaryKind::neumann_midpoint;
}

}  // namespace

struct hb_signal {
  hoburg::BoundarySignal signal;
};

struct hb_operator {
  hoburg::HolisticOperator op;
};

struct hb_trajectory {
  hoburg::Trajectory traj;
};

extern "C" {

const char* hb_last_error(void) { return g_last_error.c_str(); }

hb_signal* hb_signal_constant(double value) {
  return new (std::nothrow) hb_signal{hoburg::constant_signal(value)};
}

hb_signal* hb_signal_sine(double amplitude, double omega, double phase) {
  return new (std::nothrow) hb_signal{hoburg::sine_signal(amplitude, omega, phase)};
}

hb_signal* hb_signal_kink_value(double u_left, double u_right, double x_shock,
                                double x) {
  try {
    hoburg::KinkParams k{u_left, u_right, x_shock};
    return new hb_signal{hoburg::kink_value_signal(k, x)};
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

hb_signal* hb_signal_kink_flux(double u_left, double u_right, double x_shock, double x) {
  try {
    hoburg::KinkParams k{u_left, u_right, x_shock};
    return new hb_signal{hoburg::kink_flux_signal(k, x)};
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

hb_signal* hb_signal_callbacks(double (*value)(double, void*),
                               double (*rate)(double, void*), void* ctx) {
  if (!value || !rate) {
    set_error("signal callbacks must not be null");
    return nullptr;
  }
  hoburg::BoundarySignal s{[value, ctx](double t) { return value(t, ctx); },
                           [rate, ctx](double t) { return rate(t, ctx); }};
  return new (std::nothrow) hb_signal{std::move(s)};
}

void hb_signal_free(hb_signal* signal) { delete signal; }

double hb_boundary_coordinate(hb_bc_kind kind, int side, int m, double h,
                              double x_origin) {
  return side < 0 ? hoburg::left_boundary_coordinate(to_kind(kind), x_origin, h)
                  : hoburg::right_boundary_coordinate(to_kind(kind), x_origin, h, m);
}

hb_status hb_operator_create(int m, double h, double x_origin, int order, double gamma,
                             hb_bc_kind left_kind, const hb_signal* left_signal,
                             hb_bc_kind right_kind, const hb_signal* right_signal,
                             hb_operator** out) {
  return guarded([&]() -> hb_status {
    if (!out || !left_signal || !right_signal) {
      set_error("null argument");
      return HB_ERROR_INVALID_ARGUMENT;
    }
    hoburg::DomainConfig cfg;
    cfg.m = m;
    cfg.h = h;
    cfg.x_origin = x_origin;
    cfg.order = hoburg::TruncationOrder(order);
    cfg.gamma = gamma;
    cfg.left.kind = to_kind(left_kind);
    cfg.right.kind = to_kind(right_kind);
    // The closure consumes the scaled flux a = h * du/dx for midpoint
    // boundaries; physical flux signals are scaled here.
    cfg.left.signal = cfg.left.kind == hoburg::BoundaryKind::neumann_midpoint
                          ? hoburg::scaled_signal(left_signal->signal, h)
                          : left_signal->signal;
    cfg.right.signal = cfg.right.kind == hoburg::BoundaryKind::neumann_midpoint
                           ? hoburg::scaled_signal(right_signal->signal, h)
                           : right_signal->signal;
    *out = new hb_operator{hoburg::HolisticOperator(std::move(cfg))};
    return HB_OK;
  });
}

void hb_operator_free(hb_operator* op) { delete op; }

int hb_operator_size(const hb_operator* op) { return op ? op->op.config().m : 0; }

hb_status hb_operator_rhs(const hb_operator* op, const double* u, int n, double t,
                          double* dudt) {
  return guarded([&]() -> hb_status {
    if (!op || !u || !dudt) {
      set_error("null argument");
      return HB_ERROR_INVALID_ARGUMENT;
    }
    std::vector<double> out = op->op.rhs(std::span<const double>(u, n), t);
    std::memcpy(dudt, out.data(), out.size() * sizeof(double));
    return HB_OK;
  });
}

double hb_operator_spectral_bound(const hb_operator* op) {
  return op ? op->op.spectral_bound() : 0.0;
}

hb_status hb_operator_subgrid_sample(const hb_operator* op, const double* u, int n,
                                     int element, double xi, double* out_value) {
  return guarded([&]() -> hb_status {
    if (!op || !u || !out_value) {
      set_error("null argument");
      return HB_ERROR_INVALID_ARGUMENT;
    }
    const int m = op->op.config().m;
    if (n != m) {
      set_error("state length does not match the grid");
      return HB_ERROR_INVALID_ARGUMENT;
    }
    if (element < 1 || element > m) {
      set_error("element index out of range");
      return HB_ERROR_INVALID_ARGUMENT;
    }
    if (!(std::abs(xi) <= 1.5)) {
      set_error("xi outside [-3/2, 3/2]");
      return HB_ERROR_INVALID_ARGUMENT;
    }
    // Window centred on the element, clamped at the ends: boundary elements
    // reuse the nearest full interior window, evaluated at a shifted xi.
    int c = element - 1;
    int lo = std::min(std::max(c - 2, 0), m - 5);
    std::span<const double> window(u + lo, 5);
    *out_value = hoburg::subgrid_field_extended(window, xi + (c - (lo + 2)),
                                                op->op.config().h, op->op.config().gamma);
    return HB_OK;
  });
}

hb_status hb_integrate(const hb_operator* op, const double* u0, int n, double t0,
                       double t1, double dt, double safety, int output_every,
                       hb_trajectory** out) {
  return guarded([&]() -> hb_status {
    if (!op || !u0 || !out) {
      set_error("null argument");
      return HB_ERROR_INVALID_ARGUMENT;
    }
    hoburg::GridField field(std::vector<double>(u0, u0 + n), op->op.config().h,
                            op->op.config().x_origin);
    hoburg::IntegratorConfig cfg;
    if (dt > 0.0) cfg.dt = dt;
    cfg.t0 = t0;
    cfg.t1 = t1;
    cfg.safety = safety;
    cfg.output_every = output_every;
    *out = new hb_trajectory{hoburg::integrate(op->op, field, cfg)};
    return HB_OK;
  });
}

int hb_trajectory_rows(const hb_trajectory* traj) {
  return traj ? static_cast<int>(traj->traj.times.size()) : 0;
}

int hb_trajectory_size(const hb_trajectory* traj) {
  return traj && !traj->traj.states.empty()
             ? static_cast<int>(traj->traj.states.front().size())
             : 0;
}

double hb_trajectory_time(const hb_trajectory* traj, int row) {
  if (!traj || row < 0 || row >= static_cast<int>(traj->traj.times.size())) return 0.0;
  return traj->traj.times[row];
}

hb_status hb_trajectory_state(const hb_trajectory* traj, int row, double* out, int n) {
  if (!traj || !out || row < 0 || row >= static_cast<int>(traj->traj.states.size())) {
    set_error("trajectory row out of range");
    return HB_ERROR_INVALID_ARGUMENT;
  }
  const auto& state = traj->traj.states[row];
  if (n != static_cast<int>(state.size())) {
    set_error("output buffer length does not match the grid");
    return HB_ERROR_INVALID_ARGUMENT;
  }
  std::memcpy(out, state.data(), state.size() * sizeof(double));
  return HB_OK;
}

double hb_trajectory_dt(const hb_trajectory* traj) { return traj ? traj->traj.dt : 0.0; }

int hb_trajectory_stability_warning(const hb_trajectory* traj) {
  return traj && traj->traj.stability_warning ? 1 : 0;
}

void hb_trajectory_free(hb_trajectory* traj) { delete traj; }

double hb_kink_solution(double x, double t, double u_left, double u_right,
                        double x_shock) {
  try {
    return hoburg::kink_solution(x, t, hoburg::KinkParams{u_left, u_right, x_shock});
  } catch (const std::exception& e) {
    set_error(e.what());
    return 0.0;
  }
}

hb_status hb_fit_order(const double* hs, const double* errors, int n, double* slope) {
  return guarded([&]() -> hb_status {
    if (!hs || !errors || !slope) {
      set_error("null argument");
      return HB_ERROR_INVALID_ARGUMENT;
    }
    *slope = hoburg::fit_order(std::span<const double>(hs, n),
                               std::span<const double>(errors, n));
    return HB_OK;
  });
}

hb_status hb_verify_structural(int order, char** report, int* checks, int* failures) {
  return guarded([&]() -> hb_status {
    hoburg::StructuralReport rep =
        hoburg::verify_structural(hoburg::TruncationOrder(order));
    if (report) {
      std::string text = rep.to_text() + hoburg::forcing_sign_description() + "\n" +
                         hoburg::resolved_corrections_description() + "\n";
      *report = dup_string(text);
    }
    if (checks) *checks = static_cast<int>(rep.checks.size());
    if (failures) *failures = rep.failures();
    return HB_OK;
  });
}

hb_status hb_convergence_study(hb_bc_kind bc, const int* orders, int n_orders,
                               const int* grids, int n_grids, double u_left,
                               double u_right, double x_shock, double x_left,
                               double length, double t_end, char** csv,
                               char** summary) {
  return guarded([&]() -> hb_status {
    if (!orders || !grids || n_orders < 1 || n_grids < 1) {
      set_error("orders and grids must be non-empty");
      return HB_ERROR_INVALID_ARGUMENT;
    }
    hoburg::StudyProblem prob;
    prob.kink = hoburg::KinkParams{u_left, u_right, x_shock};
    prob.bc = to_kind(bc);
    prob.x_left = x_left;
    prob.length = length;
    prob.t_end = t_end;
    hoburg::ConvergenceReport rep = hoburg::convergence_study(
        prob, std::span<const int>(orders, n_orders), std::span<const int>(grids, n_grids));
    if (csv) *csv = dup_string(rep.to_csv());
    if (summary) *summary = dup_string(rep.to_summary());
    return HB_OK;
  });
}

void hb_string_free(char* s) { std::free(s); }

}  // extern "C"
