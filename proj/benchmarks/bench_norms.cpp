#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "psiapprox/norms.hpp"
#include "psiapprox/trig_poly.hpp"

using namespace psiapprox;

static const PsiSpec kSqrt = PsiSpec::exponential(std::numbers::ln2, 0.5);

static void LpNorm_Poly(benchmark::State& state) {
  const auto f = extremal_difference(kSqrt, static_cast<int>(state.range(0)));
  const double p = state.range(1) == 0 ? kInf : state.range(1) / 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp_norm(f, p));
  }
}
// p is encoded as 2p; 0 means the sup norm.
BENCHMARK(LpNorm_Poly)
    ->Args({25, 2})
    ->Args({25, 3})
    ->Args({25, 10})
    ->Args({25, 0})
    ->Args({100, 2})
    ->Args({100, 0})
    ->Unit(benchmark::kMicrosecond);

static void LpNorm_Callable(benchmark::State& state) {
  const PeriodicFn f = [](double t) { return std::abs(std::sin(t)) - 0.5; };
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp_norm(f, 1.5));
  }
}
BENCHMARK(LpNorm_Callable)->Unit(benchmark::kMillisecond);

static void PairingQuadrature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = extremal_difference(kSqrt, n);
  const auto g = extremal_dual(kSqrt, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairing_quadrature(f, g));
  }
}
BENCHMARK(PairingQuadrature)->Arg(25)->Arg(100);

BENCHMARK_MAIN();
