#include <benchmark/benchmark.h>

#include <numbers>

#include "psiapprox/kernel.hpp"
#include "psiapprox/trig_poly.hpp"

using namespace psiapprox;

static const PsiSpec kSqrt = PsiSpec::exponential(std::numbers::ln2, 0.5);

static void Eval_Extremal(benchmark::State& state) {
  const auto f = extremal_difference(kSqrt, static_cast<int>(state.range(0)));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(t));
    t += 1e-3;
  }
  state.counters["degree"] = f.degree();
}
BENCHMARK(Eval_Extremal)->Arg(25)->Arg(100)->Arg(400);

static void SampleUniform_Extremal(benchmark::State& state) {
  const auto f = extremal_difference(kSqrt, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_uniform(f, 4096));
  }
}
BENCHMARK(SampleUniform_Extremal)->Arg(25)->Arg(100);

static void DirichletClosedForm(benchmark::State& state) {
  double t = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet_closed_form(64, 0.5, t));
    t += 1e-4;
  }
}
BENCHMARK(DirichletClosedForm);

static void KernelEval(benchmark::State& state) {
  const KernelSpec k{kSqrt, 1.0, static_cast<int>(state.range(0))};
  const double tol = 1e-10 * kSqrt(k.n);
  const double t = state.range(1) / 1000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_eval(k, t, tol));
  }
}
BENCHMARK(KernelEval)->Args({25, 10})->Args({25, 1000})->Args({100, 1000});

static void TruncateKernel(benchmark::State& state) {
  const KernelSpec k{kSqrt, 0.0, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncate_kernel(k, 1e-10 * kSqrt(k.n)));
  }
}
BENCHMARK(TruncateKernel)->Arg(25)->Arg(100);

BENCHMARK_MAIN();
