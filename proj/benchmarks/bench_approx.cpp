#include <benchmark/benchmark.h>

#include <numbers>

#include "psiapprox/approx.hpp"
#include "psiapprox/bounds.hpp"
#include "psiapprox/norms.hpp"

using namespace psiapprox;

static const PsiSpec kSqrt = PsiSpec::exponential(std::numbers::ln2, 0.5);

static void BestUniform_Extremal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = extremal_difference(kSqrt, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_uniform(f, n - 1));
  }
  state.counters["degree"] = f.degree();
}
BENCHMARK(BestUniform_Extremal)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BestLs_Extremal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = extremal_difference(kSqrt, n);
  const double s = state.range(1) / 3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_ls(f, s, n - 1));
  }
}
// s is encoded as 3s.
BENCHMARK(BestLs_Extremal)->Args({25, 4})->Args({25, 12})->Args({50, 4})->Unit(
    benchmark::kMillisecond);

static void KernelNormUpper(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_norm_upper(kSqrt, n, 1.0, kInf));
  }
}
BENCHMARK(KernelNormUpper)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

static void VerifyTheorem1(benchmark::State& state) {
  const auto bp = BoundParams::at(kSqrt, static_cast<int>(state.range(0)), 0.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_theorem1(bp));
  }
}
BENCHMARK(VerifyTheorem1)->Arg(25)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
