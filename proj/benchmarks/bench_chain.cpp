#include <benchmark/benchmark.h>

#include "betti/bounds.hpp"
#include "betti/chains.hpp"

using namespace betti;

static void BM_ChainF2Depth2(benchmark::State& state) {
  Presentation pres = parse_presentation("< x, y | >");
  for (auto _ : state) benchmark::DoNotOptimize(build_chain(pres, 2, 2));
}
BENCHMARK(BM_ChainF2Depth2);

static void BM_ChainZ2Depth2(benchmark::State& state) {
  Presentation pres = parse_presentation("< x, y | [x, y] >");
  for (auto _ : state) benchmark::DoNotOptimize(build_chain(pres, 3, 2));
}
BENCHMARK(BM_ChainZ2Depth2);

static void BM_VdSurfaceDepth1(benchmark::State& state) {
  Presentation pres = parse_presentation("< a1, b1, a2, b2 | [a1, b1] [a2, b2] >");
  for (auto _ : state) benchmark::DoNotOptimize(vd_lower_bound(pres, 2, 1));
}
BENCHMARK(BM_VdSurfaceDepth1);
