#include <benchmark/benchmark.h>

#include "hskein/field.hpp"
#include "hskein/scalar.hpp"

using namespace hskein;

static void BM_ScalarAddFractions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Scalar sum(0);
    for (int i = 1; i <= n; ++i) sum += Scalar(1) / (Scalar(i) * z_power<Scalar>(i));
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_ScalarAddFractions)->Arg(4)->Arg(8)->Arg(12);

static void BM_ScalarMulUnknot(benchmark::State& state) {
  const Scalar u = unknot<Scalar>();
  for (auto _ : state) {
    Scalar x = u;
    for (int i = 0; i < state.range(0); ++i) x *= u + Scalar::monomial(1, i);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_ScalarMulUnknot)->Arg(4)->Arg(8);

static void BM_ScalarParse(benchmark::State& state) {
  const std::string text = (unknot<Scalar>().pow(3) + Scalar::s()).to_string();
  for (auto _ : state) benchmark::DoNotOptimize(Scalar::parse(text));
}
BENCHMARK(BM_ScalarParse);

BENCHMARK_MAIN();
