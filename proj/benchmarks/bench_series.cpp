#include <benchmark/benchmark.h>

#include "hskein/bps.hpp"
#include "hskein/recursion.hpp"

using namespace hskein;

static void BM_MakePsiDisk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_psi<Scalar>({0, 1, 1, n}));
}
BENCHMARK(BM_MakePsiDisk)->Arg(5)->Arg(9);

static void BM_DiskToWBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto psi = make_psi<Scalar>({0, 1, 1, n});
  for (auto _ : state) benchmark::DoNotOptimize(convert_all(psi, Basis::W));
}
BENCHMARK(BM_DiskToWBasis)->Arg(5)->Arg(9);

static void BM_InversePair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = make_psi<Scalar>({1, 2, 1, n});
  const auto y = make_psi<Scalar>({1, 2, -1, n});
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_InversePair)->Arg(4)->Arg(6);

static void BM_SolveAbsoluteAnnulus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto d = recursion_datum<Scalar>(DatumKind::Annulus, n);
  const auto a = relative_to_absolute(d.a);
  for (auto _ : state) benchmark::DoNotOptimize(solve_absolute(a));
}
BENCHMARK(BM_SolveAbsoluteAnnulus)->Arg(4)->Arg(6);

static void BM_GluingDisks(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto joined = tensor_concat(make_psi<Scalar>({0, 1, 1, n}), make_psi<Scalar>({0, 1, -1, n}));
  for (auto _ : state) benchmark::DoNotOptimize(pair_factors(joined, 0, 1, PairingFamily::AllPartitions));
}
BENCHMARK(BM_GluingDisks)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
