#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "assembly.hpp"
#include "grid_field.hpp"

namespace hoburg {

/// Real-axis stability limit of the classical fourth-order Runge-Kutta
/// scheme; the default safety factor absorbs advection and the widened
/// boundary-row spectrum.
inline constexpr double kRk4StabilityConstant = 2.785;

struct IntegratorConfig {
  std::optional<double> dt;  // empty -> automatic from the spectral bound
  double t0 = 0.0;
  double t1 = 0.0;
  double safety = 0.4;
  int output_every = 1;  // capture stride; the final state is always kept
};

/// Non-finite values appeared during time stepping.
class BlowupError : public std::runtime_error {
 public:
  BlowupError(long step, double t);
  long step() const { return step_; }
  double time() const { return t_; }

 private:
  long step_;
  double t_;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  double h = 1.0;
  double x_origin = 0.0;
  double dt = 0.0;
  long steps = 0;
  bool stability_warning = false;
};

/// One classical RK4 update; boundary signals are sampled at the stage
/// times t, t + dt/2 and t + dt through the operator's rhs.
GridField rk4_step(const HolisticOperator& op, const GridField& u, double t, double dt);

/// Fixed-step RK4 from t0 to t1.  The step (automatic or requested) is
/// rounded down so that an integer number of steps lands on t1 exactly;
/// captured times are computed as t0 + k*dt.
Trajectory integrate(const HolisticOperator& op, const GridField& u0,
                     const IntegratorConfig& cfg);

}  // namespace hoburg
