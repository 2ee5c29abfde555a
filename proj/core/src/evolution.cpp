#include "npeskin/evolution.hpp"

#include <cmath>
#include <stdexcept>

#include "npeskin/fft.hpp"

namespace npeskin {

namespace {

constexpr double kRk4StabilityConstant = 2.78;  // real-axis stability interval of classical RK4

void validate(const SolverConfig& cfg) {
  if (!is_power_of_two(cfg.n_points)) throw std::invalid_argument("SolverConfig: n_points must be a power of two");
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("SolverConfig: dt must be positive");
  if (!(cfg.t_end >= 0.0)) throw std::invalid_argument("SolverConfig: t_end must be nonnegative");
  if (cfg.epsilon < 0.0) throw std::invalid_argument("SolverConfig: epsilon must be nonnegative");
  if (cfg.snapshot_stride == 0) throw std::invalid_argument("SolverConfig: snapshot_stride must be >= 1");
}

std::vector<double> linear_symbol(std::size_t n, double epsilon) {
  // (1/4)|m| + eps m^2 in FFT storage order
  std::vector<double> sym(n);
  const long half = static_cast<long>(n) / 2;
  for (std::size_t k = 0; k < n; ++k) {
    const long m = (static_cast<long>(k) <= half - 1) ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
    const double a = std::abs(static_cast<double>(m));
    sym[k] = 0.25 * a + epsilon * a * a;
  }
  return sym;
}

struct Rk4Increment {
  GridFunction h;
  std::array<double, 2> drift;
};

// classical RK4 with f(h) = rhs(h) + eps h''
RadialState step_explicit(const RadialState& state, const SolverConfig& cfg, const QuadratureRule& rule) {
  auto f = [&](const GridFunction& h) {
    GridFunction out = rhs(h, rule);
    if (cfg.epsilon != 0.0) out += cfg.epsilon * derivative(h, 2);
    return out;
  };
  const GridFunction& h = state.h;
  const GridFunction k1 = f(h);
  const GridFunction k2 = f(h + 0.5 * cfg.dt * k1);
  const GridFunction k3 = f(h + 0.5 * cfg.dt * k2);
  const GridFunction k4 = f(h + cfg.dt * k3);

  const auto m1 = drift_velocity(h);
  const auto m2 = drift_velocity(h + 0.5 * cfg.dt * k1);
  const auto m3 = drift_velocity(h + 0.5 * cfg.dt * k2);
  const auto m4 = drift_velocity(h + cfg.dt * k3);

  RadialState next;
  next.h = h + (cfg.dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  for (int c = 0; c < 2; ++c)
    next.drift[c] = state.drift[c] + (cfg.dt / 6.0) * (m1[c] + 2.0 * m2[c] + 2.0 * m3[c] + m4[c]);
  next.t = state.t + cfg.dt;
  return next;
}

// integrating-factor RK4: exact linear flow e^{-L dt}, explicit N(h)
RadialState step_if(const RadialState& state, const SolverConfig& cfg, const QuadratureRule& rule) {
  const std::size_t n = state.h.size();
  const auto sym = linear_symbol(n, cfg.epsilon);
  std::vector<double> e_half(n), e_full(n);
  for (std::size_t k = 0; k < n; ++k) {
    e_half[k] = std::exp(-0.5 * cfg.dt * sym[k]);
    e_full[k] = e_half[k] * e_half[k];
  }
  auto apply = [&](const SpectralCoeffs& c, const std::vector<double>& mult) {
    SpectralCoeffs out = c;
    auto raw = out.raw();
    for (std::size_t k = 0; k < n; ++k) raw[k] *= mult[k];
    return out;
  };
  auto nhat = [&](const GridFunction& h) { return dft(nonlinearity(h, rule)); };
  auto axpy = [&](const SpectralCoeffs& a, double s, const SpectralCoeffs& b) {
    SpectralCoeffs out = a;
    auto raw = out.raw();
    auto braw = b.raw();
    for (std::size_t k = 0; k < n; ++k) raw[k] += s * braw[k];
    return out;
  };

  const SpectralCoeffs v = dft(state.h);
  const SpectralCoeffs k1 = nhat(state.h);
  const SpectralCoeffs u1 = apply(axpy(v, 0.5 * cfg.dt, k1), e_half);
  const GridFunction h1 = idft(u1);
  const SpectralCoeffs k2 = nhat(h1);
  const SpectralCoeffs u2 = axpy(apply(v, e_half), 0.5 * cfg.dt, k2);
  const GridFunction h2 = idft(u2);
  const SpectralCoeffs k3 = nhat(h2);
  const SpectralCoeffs u3 = axpy(apply(v, e_full), cfg.dt, apply(k3, e_half));
  const GridFunction h3 = idft(u3);
  const SpectralCoeffs k4 = nhat(h3);

  SpectralCoeffs vnext = apply(v, e_full);
  {
    auto raw = vnext.raw();
    auto r1 = k1.raw();
    auto r2 = k2.raw();
    auto r3 = k3.raw();
    auto r4 = k4.raw();
    for (std::size_t k = 0; k < n; ++k)
      raw[k] += (cfg.dt / 6.0) *
                (e_full[k] * r1[k] + 2.0 * e_half[k] * (r2[k] + r3[k]) + r4[k]);
  }

  const auto m1 = drift_velocity(state.h);
  const auto m2 = drift_velocity(h1);
  const auto m3 = drift_velocity(h2);
  const auto m4 = drift_velocity(h3);

  RadialState next;
  next.h = idft(vnext);
  for (int c = 0; c < 2; ++c)
    next.drift[c] = state.drift[c] + (cfg.dt / 6.0) * (m1[c] + 2.0 * m2[c] + 2.0 * m3[c] + m4[c]);
  next.t = state.t + cfg.dt;
  return next;
}

}  // namespace

GridFunction heat_mollify(const GridFunction& h0, double epsilon) {
  SpectralCoeffs c = dft(h0);
  const long half = static_cast<long>(h0.size()) / 2;
  for (long m = -half; m < half; ++m)
    c.mode(m) *= std::exp(-epsilon * static_cast<double>(m) * static_cast<double>(m));
  return idft(c);
}

double explicit_stability_limit(const SolverConfig& cfg) {
  const double nmax = static_cast<double>(cfg.n_points) / 2.0;
  return kRk4StabilityConstant / (0.25 * nmax + cfg.epsilon * nmax * nmax);
}

RadialState step(const RadialState& state, const SolverConfig& cfg, const QuadratureRule& rule) {
  validate(cfg);
  if (state.h.size() != cfg.n_points) throw std::invalid_argument("step: state size mismatch");
  if (!graph_condition(state.h)) throw GeometryError("step: graph condition lost");
  if (cfg.scheme == Scheme::explicit_rk4) {
    if (cfg.dt > explicit_stability_limit(cfg))
      throw std::invalid_argument("step: dt violates the explicit-rk4 stability limit");
    return step_explicit(state, cfg, rule);
  }
  return step_if(state, cfg, rule);
}

Trajectory simulate(const GridFunction& h0, const SolverConfig& cfg) {
  validate(cfg);
  if (h0.size() != cfg.n_points) throw std::invalid_argument("simulate: h0 size mismatch");
  const QuadratureRule rule(cfg.n_points);

  RadialState state;
  state.h = cfg.mollify_init ? heat_mollify(h0, cfg.epsilon) : h0;
  state.t = 0.0;

  Trajectory traj;
  auto record = [&](const RadialState& st) {
    traj.states.push_back(st);
    traj.records.push_back(measure(st));
  };

  const auto n_steps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
  record(state);
  for (std::size_t k = 0; k < n_steps; ++k) {
    try {
      state = step(state, cfg, rule);
    } catch (const GeometryError& err) {
      traj.aborted = true;
      traj.abort_reason = err.what();
      return traj;
    }
    state.t = static_cast<double>(k + 1) * cfg.dt;  // avoid accumulated drift in t
    if (!state.h.finite()) {
      traj.aborted = true;
      traj.abort_reason = "non-finite state";
      return traj;
    }
    if ((k + 1) % cfg.snapshot_stride == 0 || k + 1 == n_steps) record(state);
  }
  return traj;
}

double trajectory_distance_l2h1(const Trajectory& a, const Trajectory& b) {
  if (a.records.size() != b.records.size() || a.records.empty())
    throw std::invalid_argument("trajectory_distance_l2h1: incompatible snapshot counts");
  const std::size_t m = a.records.size();
  double acc = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    if (std::abs(a.records[k].t - b.records[k].t) > 1e-12)
      throw std::invalid_argument("trajectory_distance_l2h1: snapshot times differ");
    const double d = sobolev_norm(a.states[k].h - b.states[k].h, 1.0);
    double w;
    if (k == 0)
      w = 0.5 * (a.records[1].t - a.records[0].t);
    else if (k + 1 == m)
      w = 0.5 * (a.records[m - 1].t - a.records[m - 2].t);
    else
      w = 0.5 * (a.records[k + 1].t - a.records[k - 1].t);
    acc += w * d * d;
  }
  return std::sqrt(acc);
}

SweepResult viscosity_sweep(const GridFunction& h0, const SolverConfig& base,
                            std::span<const double> epsilons) {
  if (epsilons.size() < 2) throw std::invalid_argument("viscosity_sweep: need at least two viscosities");
  for (std::size_t k = 0; k < epsilons.size(); ++k) {
    if (!(epsilons[k] > 0.0)) throw std::invalid_argument("viscosity_sweep: viscosities must be positive");
    if (k > 0 && !(epsilons[k] < epsilons[k - 1]))
      throw std::invalid_argument("viscosity_sweep: viscosities must be strictly descending");
  }
  SweepResult out;
  out.epsilons.assign(epsilons.begin(), epsilons.end());
  for (double eps : epsilons) {
    SolverConfig cfg = base;
    cfg.epsilon = eps;
    out.runs.push_back(simulate(h0, cfg));
  }
  for (std::size_t k = 0; k + 1 < out.runs.size(); ++k)
    out.distances.push_back(trajectory_distance_l2h1(out.runs[k], out.runs[k + 1]));
  out.distances_decreasing = true;
  for (std::size_t k = 0; k + 1 < out.distances.size(); ++k)
    if (!(out.distances[k] > out.distances[k + 1])) out.distances_decreasing = false;
  return out;
}

}  // namespace npeskin
