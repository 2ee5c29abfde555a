#include <benchmark/benchmark.h>

#include "npeskin/evolution.hpp"
#include "npeskin/model.hpp"
#include "npeskin/random_fields.hpp"
#include "npeskin/stokeslet.hpp"

using namespace npeskin;

namespace {

void BM_dft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GridFunction f = random_smooth_field(1, n, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(dft(f));
}
BENCHMARK(BM_dft)->Arg(256)->Arg(1024)->Arg(2048);

void BM_rhs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QuadratureRule rule(n);
  const GridFunction h = random_smooth_field(2, n, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(rhs(h, rule));
}
BENCHMARK(BM_rhs)->Arg(128)->Arg(256)->Arg(512)->Arg(1024);

void BM_slope_terms(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QuadratureRule rule(n);
  const GridFunction h = random_smooth_field(3, n, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(slope_terms(h, rule));
}
BENCHMARK(BM_slope_terms)->Arg(128)->Arg(256)->Arg(512);

void BM_curve_velocity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QuadratureRule rule(n);
  const VectorCurveState curve = radial_curve(random_smooth_field(4, n, 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(curve_velocity(curve, rule));
}
BENCHMARK(BM_curve_velocity)->Arg(256)->Arg(512)->Arg(1024);

void BM_step_if_rk4(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SolverConfig cfg;
  cfg.n_points = n;
  cfg.dt = 0.01;
  const QuadratureRule rule(n);
  const RadialState st{random_smooth_field(5, n, 0.04), {0, 0}, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(step(st, cfg, rule));
}
BENCHMARK(BM_step_if_rk4)->Arg(128)->Arg(256)->Arg(512);

void BM_rule_construction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(QuadratureRule(n));
}
BENCHMARK(BM_rule_construction)->Arg(256)->Arg(1024)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
