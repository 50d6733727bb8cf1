#include <benchmark/benchmark.h>

#include <random>

#include "betti/words.hpp"

using namespace betti;

static void BM_Reduce(benchmark::State& state) {
  std::mt19937 rng(7);
  std::vector<Letter> raw;
  raw.reserve(static_cast<std::size_t>(state.range(0)));
  for (std::int64_t i = 0; i < state.range(0); ++i)
    raw.push_back(static_cast<Letter>(rng() % 6));
  for (auto _ : state) benchmark::DoNotOptimize(Word::reduce(raw));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Reduce)->Arg(1000)->Arg(100000);

static void BM_EnumerateWords(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_words(2, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateWords)->Arg(4)->Arg(7);

static void BM_ParsePresentation(benchmark::State& state) {
  const std::string text = "< a1, b1, a2, b2 | [a1, b1] [a2, b2] >";
  for (auto _ : state) benchmark::DoNotOptimize(parse_presentation(text));
}
BENCHMARK(BM_ParsePresentation);
