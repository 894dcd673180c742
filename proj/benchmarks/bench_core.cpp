#include <benchmark/benchmark.h>

#include <random>

#include "evenfix/bifurcation.hpp"
#include "evenfix/equivariants.hpp"
#include "evenfix/matgroup.hpp"
#include "evenfix/repanalysis.hpp"
#include "evenfix/wordgroup.hpp"

using namespace evenfix;

static void BM_CloseG8(benchmark::State& state) {
  const auto gens = build_g8_generators(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(close_group(gens).order());
}
BENCHMARK(BM_CloseG8)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Isotropy(benchmark::State& state) {
  const auto G = close_group(build_g8_generators(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_isotropy(G).types.size());
}
BENCHMARK(BM_Isotropy)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Character(benchmark::State& state) {
  const auto G = close_group(build_g8_generators(2));
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(equivariant_dimension(G, d));
}
BENCHMARK(BM_Character)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);

static void BM_ReynoldsCubic(benchmark::State& state) {
  const auto G = close_group(build_g8_generators(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(reynolds_equivariant_basis(G, 3).maps.size());
}
BENCHMARK(BM_ReynoldsCubic)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Branches(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(g3_branches(3, 0.7).size());
}
BENCHMARK(BM_Branches)->Unit(benchmark::kMillisecond);

static void BM_ReduceWord(benchmark::State& state) {
  const WordGroup W(make_presentation(12));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> e(-40, 40);
  std::vector<Word> words(256);
  for (auto& w : words)
    for (int i = 0; i < state.range(0); ++i) w.append(i % 2 == 0 ? 'r' : 'a', e(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(W.reduce(words[i++ % words.size()]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ReduceWord)->Arg(8)->Arg(64)->Arg(512);

static void BM_PresentationSetup(benchmark::State& state) {
  const Presentation p = make_presentation(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(WordGroup(p).order());
}
BENCHMARK(BM_PresentationSetup)->Arg(12)->Arg(36)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
