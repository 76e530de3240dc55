#include "kink.hpp"

#include <cmath>
#include <stdexcept>

namespace hoburg {

namespace {

struct KinkFrame {
  double s, mu, theta;
};

KinkFrame frame(double x, double t, const KinkParams& k) {
  if (!(k.u_left > k.u_right)) {
    throw std::invalid_argument("viscous shock requires u_left > u_right");
  }
  double s = 0.5 * (k.u_left + k.u_right);
  double mu = 0.5 * (k.u_left - k.u_right);
  return {s, mu, 0.5 * mu * (x - k.x_shock - s * t)};
}

double sech2(double z) {
  double c = std::cosh(z);
  return 1.0 / (c * c);
}

}  // namespace

double kink_solution(double x, double t, const KinkParams& k) {
  auto f = frame(x, t, k);
  return f.s - f.mu * std::tanh(f.theta);
}

double kink_slope(double x, double t, const KinkParams& k) {
  auto f = frame(x, t, k);
  return -0.5 * f.mu * f.mu * sech2(f.theta);
}

double kink_rate(double x, double t, const KinkParams& k) {
  auto f = frame(x, t, k);
  return 0.5 * f.s * f.mu * f.mu * sech2(f.theta);
}

double kink_slope_rate(double x, double t, const KinkParams& k) {
  auto f = frame(x, t, k);
  return -0.5 * f.s * f.mu * f.mu * f.mu * sech2(f.theta) * std::tanh(f.theta);
}

BoundarySignal kink_value_signal(const KinkParams& k, double x) {
  frame(x, 0.0, k);  // validate parameters up front
  return {[k, x](double t) { return kink_solution(x, t, k); },
          [k, x](double t) { return kink_rate(x, t, k); }};
}

BoundarySignal kink_flux_signal(const KinkParams& k, double x) {
  frame(x, 0.0, k);
  return {[k, x](double t) { return kink_slope(x, t, k); },
          [k, x](double t) { return kink_slope_rate(x, t, k); }};
}

}  // namespace hoburg
