#include <benchmark/benchmark.h>

#include "rfi/analytic.hpp"
#include "rfi/combinatorics.hpp"
#include "rfi/montecarlo.hpp"
#include "rfi/rng.hpp"

namespace {

rfi::Scenario reference() {
  rfi::Scenario s = rfi::default_scenario();
  s.path_loss_exponent = 2.05;
  return s;
}

void BM_ClosedFormCumulants(benchmark::State& state) {
  const rfi::Scenario s = reference();
  const rfi::GeometrySummary g = rfi::derive_geometry(s);
  const auto lobe = state.range(0) == 0 ? rfi::Lobe::main : rfi::Lobe::side;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfi::cumulants(s, g, lobe, 4));
  }
}
BENCHMARK(BM_ClosedFormCumulants)->Arg(0)->Arg(1);

void BM_BellPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double v = 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfi::bell_polynomial(n, v));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_BellPolynomial)->Arg(4)->Arg(20);

void BM_SideLobeCgfQuadrature(benchmark::State& state) {
  const rfi::Scenario s = reference();
  const rfi::GeometrySummary g = rfi::derive_geometry(s);
  const double tol = state.range(0) == 0 ? 1e-6 : 1e-10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfi::cgf_side_lobe(s, g, 0.5, tol));
  }
}
BENCHMARK(BM_SideLobeCgfQuadrature)->Arg(0)->Arg(1);

void BM_PoissonDraw(benchmark::State& state) {
  const rfi::PoissonSampler draw(static_cast<double>(state.range(0)));
  rfi::TrialRng rng(42, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(draw(rng));
  }
}
BENCHMARK(BM_PoissonDraw)->Arg(3)->Arg(100)->Arg(2476);

void BM_SampleTrial(benchmark::State& state) {
  const rfi::Scenario s = reference();
  const rfi::GeometrySummary g = rfi::derive_geometry(s);
  std::uint64_t i = 0;
  for (auto _ : state) {
    rfi::TrialRng rng(42, i++);
    benchmark::DoNotOptimize(state.range(0) == 0 ? rfi::sample_main_lobe(s, g, rng)
                                                 : rfi::sample_side_lobe(s, g, rng));
  }
}
BENCHMARK(BM_SampleTrial)->Arg(0)->Arg(1);

void BM_EstimateSideLobe(benchmark::State& state) {
  const rfi::Scenario s = reference();
  const rfi::GeometrySummary g = rfi::derive_geometry(s);
  const rfi::McConfig cfg{static_cast<std::uint64_t>(state.range(0)), 42, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfi::estimate(s, g, rfi::Lobe::side, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateSideLobe)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
