#include <benchmark/benchmark.h>

#include "hskein/characters.hpp"
#include "hskein/skein.hpp"

using namespace hskein;

static void BM_CharacterTable(benchmark::State& state) {
  // The table cache is process-wide, so time the rows through character().
  const int n = static_cast<int>(state.range(0));
  (void)char_table(n);
  for (auto _ : state) {
    std::int64_t sum = 0;
    for (const Partition& l : partitions_of(n))
      for (const Partition& m : partitions_of(n)) sum += character(l, m);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_CharacterTable)->Arg(6)->Arg(10);

static void BM_BasisConvertWtoP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SkeinElem<Scalar> x;
  for (const Partition& p : partitions_of(n)) x.add_term(p, Scalar::monomial(1, p.length()));
  for (auto _ : state) benchmark::DoNotOptimize(basis_convert(x, Basis::P));
}
BENCHMARK(BM_BasisConvertWtoP)->Arg(4)->Arg(6)->Arg(8);

static void BM_MultiplyW(benchmark::State& state) {
  const auto x = SkeinElem<Scalar>::basis_element(Basis::W, {2, 1});
  const auto y = SkeinElem<Scalar>::basis_element(Basis::W, {3, 1});
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_MultiplyW);

BENCHMARK_MAIN();
