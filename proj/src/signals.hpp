#pragma once

#include <cmath>
#include <functional>

namespace hoburg {

/// Time-dependent boundary data a(t) together with its rate da/dt.
/// For a Dirichlet boundary `value` is the prescribed field value; for a
/// Neumann boundary it is the scaled flux a = h * du/dx (dimensionless in
/// the grid spacing), so the stored signal changes with the grid.
struct BoundarySignal {
  std::function<double(double)> value;
  std::function<double(double)> rate;
};

inline BoundarySignal constant_signal(double c) {
  return {[c](double) { return c; }, [](double) { return 0.0; }};
}

inline BoundarySignal zero_signal() { return constant_signal(0.0); }

/// amplitude * sin(omega t + phase)
inline BoundarySignal sine_signal(double amplitude, double omega, double phase) {
  return {[=](double t) { return amplitude * std::sin(omega * t + phase); },
          [=](double t) { return amplitude * omega * std::cos(omega * t + phase); }};
}

inline BoundarySignal negated_signal(const BoundarySignal& s) {
  auto v = s.value;
  auto r = s.rate;
  return {[v](double t) { return -v(t); }, [r](double t) { return -r(t); }};
}

inline BoundarySignal scaled_signal(const BoundarySignal& s, double factor) {
  auto v = s.value;
  auto r = s.rate;
  return {[v, factor](double t) { return factor * v(t); },
          [r, factor](double t) { return factor * r(t); }};
}

}  // namespace hoburg
