// Serial reference loops against the OpenMP versions of the same kernels.

#include <benchmark/benchmark.h>

#include "foldline/verify.hpp"

using namespace foldline;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& state) { state.SetLabel(std::string(to_string(mode(state)))); }

const B2Models& models() {
  static const B2Models m;
  return m;
}

void BM_B2Tropical(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_b2_tropical(models(), 0, 1000, mode(state)));
  label(state);
}

void BM_B2Rational(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_b2_rational(models(), 0, 200, mode(state)));
  label(state);
}

void BM_ChainA4(benchmark::State& state) {
  const auto data = embedded_chain("b2-from-a4");
  for (auto _ : state) benchmark::DoNotOptimize(verify_chain(data, mode(state)));
  label(state);
}

void BM_PathIndependenceA3(benchmark::State& state) {
  const auto d = builtin("A3").datum;
  for (auto _ : state) benchmark::DoNotOptimize(check_path_independence(d, mode(state)));
  label(state);
}

void BM_FrobeniusA3(benchmark::State& state) {
  const Monoid m(builtin("A3").datum);
  for (auto _ : state) benchmark::DoNotOptimize(check_frobenius_multiplicative(m, 0, 500, mode(state)));
  label(state);
}

void BM_FillingsA4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_filling_independence(models().from_a4(), mode(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_B2Tropical)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_B2Rational)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChainA4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathIndependenceA3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrobeniusA3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FillingsA4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
