#include <benchmark/benchmark.h>

#include "gforge/coloring.hpp"
#include "gforge/gallai.hpp"

using namespace gforge;

static void BM_GallaiPartition(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto g = random_gallai(m, 4, 17);
  for (auto _ : state) {
    auto P = gallai_partition(g);
    benchmark::DoNotOptimize(P);
  }
}
BENCHMARK(BM_GallaiPartition)->Arg(20)->Arg(40)->Arg(80);

static void BM_RandomGallai(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto g = random_gallai(m, 4, seed++);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_RandomGallai)->Arg(40)->Arg(160);
