#pragma once

#include "signals.hpp"

namespace hoburg {

/// Travelling viscous shock connecting u_left (upstream) to u_right
/// (downstream), u_left > u_right:
///   u(x, t) = s - mu * tanh(mu (x - x_shock - s t) / 2)
/// with speed s = (u_left + u_right)/2 and strength mu = (u_left - u_right)/2.
/// Satisfies u_t + u u_x = u_xx identically; the primary exact-solution
/// oracle for this solver.
struct KinkParams {
  double u_left = 2.0;
  double u_right = 0.0;
  double x_shock = 0.0;
};

double kink_solution(double x, double t, const KinkParams& k);
double kink_slope(double x, double t, const KinkParams& k);       // du/dx
double kink_rate(double x, double t, const KinkParams& k);        // du/dt
double kink_slope_rate(double x, double t, const KinkParams& k);  // d2u/dx dt

/// Boundary value a(t) = u(x, t) with analytic rate.
BoundarySignal kink_value_signal(const KinkParams& k, double x);

/// Physical flux g(t) = du/dx(x, t) with analytic rate (unscaled).
BoundarySignal kink_flux_signal(const KinkParams& k, double x);

}  // namespace hoburg
