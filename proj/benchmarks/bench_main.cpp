#include <benchmark/benchmark.h>

#include <random>

#include "rainbowlab/bijection.hpp"
#include "rainbowlab/canonical.hpp"
#include "rainbowlab/enumeration.hpp"
#include "rainbowlab/puzzle.hpp"
#include "rainbowlab/rainbow.hpp"
#include "rainbowlab/switching.hpp"

using namespace rainbowlab;

namespace {

Graph random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v, rng() & 1U);
  }
  return g;
}

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 12, 2);

// Vertex-transitive inputs are the worst case for branch-and-bound.
void BM_CanonicalFormDoubled(benchmark::State& state) {
  const Graph g = psi(Graph(static_cast<int>(state.range(0)))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormDoubled)->DenseRange(2, 6);

void BM_SwitchingCanonicalForm(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(switching_canonical_form(g));
}
BENCHMARK(BM_SwitchingCanonicalForm)->DenseRange(3, 7);

void BM_EnumerateRegular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regular_graphs(2 * n, n));
}
BENCHMARK(BM_EnumerateRegular)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_FindRainbowColoring(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = psi(random_graph(n, 3)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(find_rainbow_coloring(g, n));
}
BENCHMARK(BM_FindRainbowColoring)->DenseRange(2, 10, 2);

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census(n));
}
BENCHMARK(BM_Census)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_PuzzleRound(benchmark::State& state) {
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    const puzzle::Board b = puzzle::Board::from_mask(6, rng());
    const puzzle::FlipResult r = puzzle::wise1_flip(b, static_cast<int>(rng() & 63U));
    benchmark::DoNotOptimize(puzzle::wise2_guess(r.after));
  }
}
BENCHMARK(BM_PuzzleRound);

}  // namespace
BENCHMARK_MAIN();
