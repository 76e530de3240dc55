#include "integrate.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace hoburg {

namespace {

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace

BlowupError::BlowupError(long step, double t)
    : std::runtime_error("solution blew up at step " + std::to_string(step) +
                         ", t = " + std::to_string(t)),
      step_(step),
      t_(t) {}

GridField rk4_step(const HolisticOperator& op, const GridField& u, double t, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("time step must be positive");
  const size_t n = u.values.size();

  std::vector<double> k1 = op.rhs(u.values, t);
  std::vector<double> stage(n);

  for (size_t i = 0; i < n; ++i) stage[i] = u.values[i] + 0.5 * dt * k1[i];
  std::vector<double> k2 = op.rhs(stage, t + 0.5 * dt);

  for (size_t i = 0; i < n; ++i) stage[i] = u.values[i] + 0.5 * dt * k2[i];
  std::vector<double> k3 = op.rhs(stage, t + 0.5 * dt);

  for (size_t i = 0; i < n; ++i) stage[i] = u.values[i] + dt * k3[i];
  std::vector<double> k4 = op.rhs(stage, t + dt);

  std::vector<double> out(n);
  for (size_t i = 0; i < n; ++i) {
    out[i] = u.values[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  if (!all_finite(out)) throw BlowupError(-1, t + dt);
  return GridField(std::move(out), u.h, u.x_origin);
}

Trajectory integrate(const HolisticOperator& op, const GridField& u0,
                     const IntegratorConfig& cfg) {
  if (u0.size() != op.config().m) {
    throw std::invalid_argument("initial state length does not match the grid");
  }
  if (cfg.t1 < cfg.t0) throw std::invalid_argument("t1 must not precede t0");
  if (!(cfg.safety > 0.0 && cfg.safety <= 1.0)) {
    throw std::invalid_argument("safety factor must lie in (0, 1]");
  }
  if (cfg.output_every < 1) throw std::invalid_argument("output stride must be >= 1");

  const double h = op.config().h;
  const double span = cfg.t1 - cfg.t0;
  const double bound = op.spectral_bound();
  const double dt_stable =
      bound > 0.0 ? kRk4StabilityConstant * h * h / bound
                  : std::numeric_limits<double>::infinity();

  Trajectory traj;
  traj.h = u0.h;
  traj.x_origin = u0.x_origin;
  traj.times.push_back(cfg.t0);
  traj.states.push_back(u0.values);
  if (span == 0.0) return traj;

  double dt_request;
  if (cfg.dt) {
    if (*cfg.dt <= 0.0) throw std::invalid_argument("time step must be positive");
    dt_request = *cfg.dt;
  } else {
    dt_request = std::isfinite(dt_stable) ? cfg.safety * dt_stable : span;
  }
  long n = static_cast<long>(std::ceil(span / dt_request * (1.0 - 1e-12)));
  n = std::max(n, 1L);
  const double dt = span / static_cast<double>(n);
  traj.dt = dt;
  traj.steps = n;
  traj.stability_warning = dt > dt_stable;

  GridField u = u0;
  for (long k = 0; k < n; ++k) {
    double t = cfg.t0 + static_cast<double>(k) * dt;
    try {
      u = rk4_step(op, u, t, dt);
    } catch (const BlowupError& e) {
      throw BlowupError(k + 1, e.time());
    }
    if ((k + 1) % cfg.output_every == 0 || k + 1 == n) {
      traj.times.push_back(cfg.t0 + static_cast<double>(k + 1) * dt);
      traj.states.push_back(u.values);
    }
  }
  return traj;
}

}  // namespace hoburg
