#include <benchmark/benchmark.h>

#include "gforge/constructions.hpp"
#include "gforge/cycles.hpp"

using namespace gforge;

static void BM_MonoCycleScanEfrs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const auto g = efrs_witness({n, k});
  for (auto _ : state) {
    auto hit = find_monochromatic_cycle(g, 2 * n + 1);
    benchmark::DoNotOptimize(hit);
  }
  state.SetLabel(std::to_string(g.vertex_count()) + " vertices");
}
BENCHMARK(BM_MonoCycleScanEfrs)->Args({4, 3})->Args({5, 4})->Args({5, 5});

static void BM_RainbowScan(benchmark::State& state) {
  const auto g = efrs_witness({5, static_cast<int>(state.range(0))});
  for (auto _ : state) {
    auto t = find_rainbow_triangle(g);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_RainbowScan)->Arg(3)->Arg(5);
