#include "npeskin/monitors.hpp"

#include <cmath>
#include <stdexcept>

namespace npeskin {

namespace {
void check_small_data(const Trajectory& traj) {
  if (traj.records.empty()) throw std::invalid_argument("monitor: empty trajectory");
  const double w0 = traj.records.front().sup_h + traj.records.front().sup_hprime;
  if (w0 > kSmallDataBound * (1.0 + 1e-9))
    throw std::invalid_argument("monitor: initial W^{1,inf} size exceeds the small-data regime");
}
}  // namespace

MaxPrincipleReport maximum_principle_monitor(const Trajectory& traj) {
  check_small_data(traj);
  MaxPrincipleReport rep;
  const auto& recs = traj.records;
  const double w0 = recs.front().sup_h + recs.front().sup_hprime;
  rep.tolerance = 1e-8 * (1.0 + w0);
  rep.worst_step_increase = 0.0;
  rep.worst_time = recs.front().t;
  for (std::size_t k = 0; k + 1 < recs.size(); ++k) {
    const double wa = recs[k].sup_h + recs[k].sup_hprime;
    const double wb = recs[k + 1].sup_h + recs[k + 1].sup_hprime;
    if (wb - wa > rep.worst_step_increase) {
      rep.worst_step_increase = wb - wa;
      rep.worst_time = recs[k + 1].t;
    }
  }
  rep.monotone = rep.worst_step_increase <= rep.tolerance;

  // decay-rate fit on the trailing half, skipped for identically flat slopes
  const std::size_t start = recs.size() / 2;
  std::vector<double> ts, vals;
  for (std::size_t k = start; k < recs.size(); ++k) {
    if (recs[k].sup_hprime <= 0.0) return rep;
    ts.push_back(recs[k].t);
    vals.push_back(recs[k].sup_hprime);
  }
  if (ts.size() >= 2) rep.decay_rate = fit_decay_rate(ts, vals);
  return rep;
}

EnergyReport energy_monitor(const Trajectory& traj) {
  check_small_data(traj);
  EnergyReport rep;
  const auto& recs = traj.records;
  rep.finite_ok = true;
  double kmax = 0.0;
  bool any = false;
  for (std::size_t k = 1; k + 1 < recs.size(); ++k) {
    const double dt2 = recs[k + 1].t - recs[k - 1].t;
    const double dEdt = (recs[k + 1].l2_hprime_sq - recs[k - 1].l2_hprime_sq) / dt2;
    const double lhs = dEdt + 0.25 * recs[k].hhalf_hprime_sq;
    const double w = recs[k].sup_h + recs[k].sup_hprime;
    if (!std::isfinite(lhs)) rep.finite_ok = false;
    if (w * w > 1e-30) {
      const double ratio = lhs / (w * w);
      kmax = any ? std::max(kmax, ratio) : ratio;
      any = true;
    } else if (lhs > 1e-20) {
      rep.finite_ok = false;  // nonzero production out of a zero state
    }
  }
  rep.k_fitted = any ? kmax : 0.0;

  for (std::size_t k = 0; k < recs.size(); ++k) {
    const double e = recs[k].h32_norm * recs[k].h32_norm;
    double w;
    if (recs.size() == 1)
      w = 0.0;
    else if (k == 0)
      w = 0.5 * (recs[1].t - recs[0].t);
    else if (k + 1 == recs.size())
      w = 0.5 * (recs[k].t - recs[k - 1].t);
    else
      w = 0.5 * (recs[k + 1].t - recs[k - 1].t);
    rep.h32_sq_time_integral += w * e;
  }
  if (!std::isfinite(rep.h32_sq_time_integral)) rep.finite_ok = false;
  return rep;
}

double weak_residual(const Trajectory& traj, const SpaceTimeTestFunction& phi,
                     const NonlinearityFn& nonlinearity_fn) {
  if (traj.records.size() < 2) throw std::invalid_argument("weak_residual: need >= 2 snapshots");
  const std::size_t n = traj.states.front().h.size();
  const std::size_t m = traj.records.size();
  const double t_final = traj.records.back().t;
  const double w_s = two_pi / static_cast<double>(n);

  GridFunction probe(n);
  for (std::size_t j = 0; j < n; ++j) probe[j] = phi.value(t_final, probe.node(j));
  if (sup_norm(probe) > 1e-10)
    throw std::invalid_argument("weak_residual: test function must vanish at the final time");
  if (std::abs(traj.records.front().t) > 1e-14)
    throw std::invalid_argument("weak_residual: trajectory must start at t = 0");

  double acc = 0.0;
  {
    const GridFunction& h0 = traj.states.front().h;
    for (std::size_t j = 0; j < n; ++j) acc -= phi.value(0.0, h0.node(j)) * h0[j] * w_s;
  }
  for (std::size_t k = 0; k < m; ++k) {
    const double t = traj.records[k].t;
    const GridFunction& h = traj.states[k].h;
    GridFunction phik(n), dphik(n);
    for (std::size_t j = 0; j < n; ++j) {
      phik[j] = phi.value(t, phik.node(j));
      dphik[j] = phi.time_derivative(t, phik.node(j));
    }
    const GridFunction lphik = lambda_pow(phik, 1.0);
    const GridFunction nl = nonlinearity_fn(h);
    double inner = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      inner += (-dphik[j] * h[j] + 0.25 * lphik[j] * h[j] - nl[j] * phik[j]) * w_s;
    double wt;
    if (k == 0)
      wt = 0.5 * (traj.records[1].t - traj.records[0].t);
    else if (k + 1 == m)
      wt = 0.5 * (traj.records[m - 1].t - traj.records[m - 2].t);
    else
      wt = 0.5 * (traj.records[k + 1].t - traj.records[k - 1].t);
    acc += wt * inner;
  }
  return std::abs(acc);
}

double weak_residual(const Trajectory& traj, const SpaceTimeTestFunction& phi) {
  const std::size_t n = traj.states.front().h.size();
  const QuadratureRule rule(n);
  return weak_residual(traj, phi, [&rule](const GridFunction& h) { return nonlinearity(h, rule); });
}

}  // namespace npeskin
