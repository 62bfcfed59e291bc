#include <benchmark/benchmark.h>

#include "gforge/search.hpp"

using namespace gforge;

static void BM_VerifyUpperK6C4(benchmark::State& state) {
  for (auto _ : state) {
    auto r = verify_upper({6, 4, 2}, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_VerifyUpperK6C4)->Arg(1)->Arg(4);

static void BM_VerifyUpperK6C3Gallai(benchmark::State& state) {
  for (auto _ : state) {
    auto r = verify_upper({6, 3, 2, true}, 1);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_VerifyUpperK6C3Gallai);

BENCHMARK_MAIN();
