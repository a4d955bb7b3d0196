#include <benchmark/benchmark.h>

#include "focal/focal.hpp"

using namespace focal;

static void BM_FocalEntropyMax(benchmark::State &state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(focal_entropy_max(size, 20.0));
}
BENCHMARK(BM_FocalEntropyMax)->Arg(2)->Arg(12)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_ExactCodeDistortion(benchmark::State &state) {
  const Pmf r = binomial_pmf(static_cast<unsigned>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(exact_code_distortion(r, r, 8, 2.0));
}
BENCHMARK(BM_ExactCodeDistortion)->Arg(20)->Arg(100)->Arg(1000);

static void BM_IidSpectrum(benchmark::State &state) {
  const Pmf b = bernoulli_pmf(0.2);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iid_spectrum(b, b, n));
}
BENCHMARK(BM_IidSpectrum)->Arg(25)->Arg(200);

static void BM_ExhaustiveDstar(benchmark::State &state) {
  const Pmf r = binomial_pmf(static_cast<unsigned>(state.range(0)) - 1, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_dstar(r, 2, 1.0));
}
BENCHMARK(BM_ExhaustiveDstar)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_OptimizeFx(benchmark::State &state) {
  const Pmf r = binomial_pmf(100, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(optimize_fx(r, 8, 5.0));
}
BENCHMARK(BM_OptimizeFx)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
