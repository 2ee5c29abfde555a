#pragma once

#include <span>
#include <string>
#include <vector>

#include "npeskin/diagnostics.hpp"
#include "npeskin/model.hpp"

namespace npeskin {

enum class Scheme { explicit_rk4, if_rk4 };

struct SolverConfig {
  std::size_t n_points = 256;
  double dt = 1e-2;
  double t_end = 1.0;
  double epsilon = 0.0;        // viscosity coefficient of the regularized problem
  Scheme scheme = Scheme::if_rk4;
  bool mollify_init = false;   // replace h0 by the spectral heat mollification e^{-eps n^2}
  std::size_t snapshot_stride = 1;
};

struct Trajectory {
  std::vector<RadialState> states;
  std::vector<DiagnosticsRecord> records;
  bool aborted = false;
  std::string abort_reason;
};

/// Spectral heat kernel at time eps: multiplier e^{-eps n^2}.
GridFunction heat_mollify(const GridFunction& h0, double epsilon);

/// Largest dt the explicit scheme accepts: 2.78 / max_n (|n|/4 + eps n^2).
double explicit_stability_limit(const SolverConfig& cfg);

/// One step of the selected scheme, advancing h and the drift point with the
/// same RK stages. if_rk4 applies the linear multiplier e^{-((1/4)|n|+eps n^2)dt}
/// exactly in spectral space and treats N(h) explicitly; explicit_rk4 rejects
/// dt above the stability limit.
RadialState step(const RadialState& state, const SolverConfig& cfg, const QuadratureRule& rule);

/// March to t_end, recording diagnostics every snapshot_stride steps (plus the
/// initial and final states). A geometry error aborts cleanly, leaving the
/// trajectory collected so far with the abort flag set.
Trajectory simulate(const GridFunction& h0, const SolverConfig& cfg);

/// Discrete L2([0,T]; H^1) distance between two trajectories sampled at the
/// same snapshot times (trapezoid in time, inhomogeneous H^1 in space).
double trajectory_distance_l2h1(const Trajectory& a, const Trajectory& b);

struct SweepResult {
  std::vector<double> epsilons;
  std::vector<Trajectory> runs;
  std::vector<double> distances;  // distances[k] between runs k and k+1
  bool distances_decreasing = false;
};

/// Runs simulate for each viscosity in the (descending, positive) list and
/// reports consecutive trajectory distances.
SweepResult viscosity_sweep(const GridFunction& h0, const SolverConfig& base,
                            std::span<const double> epsilons);

}  // namespace npeskin
