#include <benchmark/benchmark.h>

#include "asianlt/benchmark_cases.hpp"
#include "asianlt/complex_kernel.hpp"
#include "asianlt/mc_oracle.hpp"
#include "asianlt/pricer.hpp"
#include "asianlt/transform_core.hpp"

using namespace asianlt;

static void BM_LogGamma(benchmark::State& state) {
  Complex w{3.7, 250.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(w));
  }
}
BENCHMARK(BM_LogGamma);

static void BM_BesselIScaled(benchmark::State& state) {
  const double xi = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_i_scaled({3.2, 1.7}, xi));
  }
}
BENCHMARK(BM_BesselIScaled)->Arg(1)->Arg(30)->Arg(300);

static void BM_Kummer(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kummer_phi({2.3, 40.0}, {3.6, 80.0}, x));
  }
}
BENCHMARK(BM_Kummer)->Arg(8)->Arg(200);

static void BM_LaplaceF(benchmark::State& state) {
  const TransformEvaluator eval(0.0625, {-0.6, 0.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval({200.0, 5000.0}));
  }
}
BENCHMARK(BM_LaplaceF);

static void BM_WeberQuadrature(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(weber_d_quadrature(0.0625, {-0.6, 0.0}, {6.0, 5.0}));
  }
}
BENCHMARK(BM_WeberQuadrature)->Unit(benchmark::kMicrosecond);

static void BM_PriceBenchmarkCase(benchmark::State& state) {
  const MarketInputs m = to_market(benchmark_case(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(price_asian(m));
  }
}
BENCHMARK(BM_PriceBenchmarkCase)->DenseRange(1, 7)->Unit(benchmark::kMillisecond);

static void BM_McPrice(benchmark::State& state) {
  const MarketInputs m = to_market(benchmark_case(5));
  McConfig cfg;
  cfg.paths = 10000;
  cfg.steps_per_unit_time = 250;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_price_asian(m, cfg));
  }
}
BENCHMARK(BM_McPrice)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
