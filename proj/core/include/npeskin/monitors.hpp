#pragma once

#include <functional>
#include <optional>

#include "npeskin/evolution.hpp"

namespace npeskin {

/// Small-data bound required by the trajectory monitors; the theory's constant
/// is not quantified, this is the artifact's conservative test regime.
inline constexpr double kSmallDataBound = 0.05;

struct MaxPrincipleReport {
  bool monotone = false;            // sup_h + sup_hprime non-increasing up to tolerance
  double tolerance = 0.0;           // 1e-8 * (1 + initial norm), applied per step
  double worst_step_increase = 0.0; // most positive consecutive increase observed
  double worst_time = 0.0;
  std::optional<double> decay_rate; // delta fitted on log sup_hprime, trailing half; absent when h' == 0
};

/// Monotonicity of the Lipschitz size along a small-data trajectory plus the
/// exponential decay-rate fit of |h'|_inf (least squares over the trailing half).
MaxPrincipleReport maximum_principle_monitor(const Trajectory& traj);

struct EnergyReport {
  double k_fitted = 0.0;               // max over snapshots of (d/dt|h'|^2 + (1/4)|L^{1/2}h'|^2) / |h|_{W1inf}^2
  double h32_sq_time_integral = 0.0;   // trapezoid of |h(t)|_{H^{3/2}}^2 over the trajectory
  bool finite_ok = false;
};

EnergyReport energy_monitor(const Trajectory& traj);

struct SpaceTimeTestFunction {
  std::function<double(double t, double s)> value;
  std::function<double(double t, double s)> time_derivative;
};

using NonlinearityFn = std::function<GridFunction(const GridFunction&)>;

/// Absolute residual of the weak form along a trajectory:
/// |-\int phi(0) h0 + \int\int (-dphi/dt h + (1/4) Lambda phi h - N(h) phi)|.
/// phi must vanish at the final snapshot time. The nonlinearity defaults to
/// N(h) computed from the model; pass an override to test manufactured solutions.
double weak_residual(const Trajectory& traj, const SpaceTimeTestFunction& phi,
                     const NonlinearityFn& nonlinearity_fn);
double weak_residual(const Trajectory& traj, const SpaceTimeTestFunction& phi);

}  // namespace npeskin
