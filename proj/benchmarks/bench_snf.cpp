#include <benchmark/benchmark.h>

#include <random>

#include "betti/homology.hpp"

using namespace betti;

namespace {

ExponentMatrix random_matrix(std::size_t rows, std::size_t cols, int bound, unsigned seed) {
  std::mt19937 rng(seed);
  ExponentMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  return m;
}

} // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ExponentMatrix m = random_matrix(n, n, 9, 11);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(20)->Arg(40);

static void BM_SmithWithTransforms(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ExponentMatrix m = random_matrix(n, n, 9, 13);
  for (auto _ : state) {
    SmithTransforms tf;
    benchmark::DoNotOptimize(smith_normal_form(m, tf));
  }
}
BENCHMARK(BM_SmithWithTransforms)->Arg(8)->Arg(20);

static void BM_B1ModP(benchmark::State& state) {
  Presentation pres = parse_presentation("< a1, b1, a2, b2 | [a1, b1] [a2, b2] >");
  for (auto _ : state) benchmark::DoNotOptimize(b1_mod_p(pres, 2));
}
BENCHMARK(BM_B1ModP);
