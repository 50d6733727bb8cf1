#include <benchmark/benchmark.h>

#include "betti/coset.hpp"

using namespace betti;

static void BM_ToddCoxeterS3(benchmark::State& state) {
  Presentation pres = parse_presentation("< a, b | a^2, b^2, (a b)^3 >");
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(pres, {}));
}
BENCHMARK(BM_ToddCoxeterS3);

static void BM_ToddCoxeterQuaternion(benchmark::State& state) {
  Presentation pres = parse_presentation("< a, b | a^4, a^2 b^-2, b^-1 a b a >");
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(pres, {}));
}
BENCHMARK(BM_ToddCoxeterQuaternion);

static void BM_CyclicRegular(benchmark::State& state) {
  Presentation pres = parse_presentation("< x | x^" + std::to_string(state.range(0)) + " >");
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(pres, {}));
}
BENCHMARK(BM_CyclicRegular)->Arg(64)->Arg(1024);

static void BM_NormalClosureF2Stage2(benchmark::State& state) {
  // second derived 2-series stage of the free group of rank 2: 128 cosets
  Presentation pres = parse_presentation("< x, y | >");
  std::vector<Word> closure = parse_word_list(
      "x^2, y^2, [x, y], (x^2)^2, (y^2)^2, [x^2, y^2]", pres);
  for (auto _ : state) benchmark::DoNotOptimize(normal_closure_table(pres, closure));
}
BENCHMARK(BM_NormalClosureF2Stage2);
