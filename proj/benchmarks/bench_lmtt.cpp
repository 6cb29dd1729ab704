#include <numbers>
#include <random>

#include <benchmark/benchmark.h>

#include "lmtt/distance.hpp"
#include "lmtt/envelope.hpp"
#include "lmtt/mergetree.hpp"
#include "support/generators.hpp"

using namespace lmtt;

namespace {

std::pair<EmbeddedGraph, EmbeddedGraph> polygon_pair(std::size_t n) {
  std::mt19937_64 rng(n);
  return {testing::random_polygon(rng, n, {0, 0}, 1.0, 1.0, 0.1),
          testing::random_polygon(rng, n, {0.05, 0}, 1.2, 0.8, 0.1)};
}

void BM_ExactPolygons(benchmark::State& state) {
  auto [g1, g2] = polygon_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lmtt_exact(g1, g2).distance);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactPolygons)->RangeMultiplier(2)->Range(4, 32)->Complexity()->Unit(benchmark::kMillisecond);

void BM_ExactPlanar(benchmark::State& state) {
  std::mt19937_64 rng(7);
  auto n = static_cast<std::size_t>(state.range(0));
  auto g1 = testing::random_planar_graph(rng, n);
  auto g2 = testing::random_planar_graph(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(lmtt_exact(g1, g2).distance);
}
BENCHMARK(BM_ExactPlanar)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Approx(benchmark::State& state) {
  auto [g1, g2] = polygon_pair(16);
  auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lmtt_approx(g1, g2, k).distance);
}
BENCHMARK(BM_Approx)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_MergeTree(benchmark::State& state) {
  std::mt19937_64 rng(11);
  auto g = testing::random_planar_graph(rng, static_cast<std::size_t>(state.range(0)));
  double w = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_merge_tree(g, w).size());
    w += 1e-3;
  }
}
BENCHMARK(BM_MergeTree)->Arg(16)->Arg(64)->Arg(256);

template <EnvelopeMethod M>
void BM_Envelope(benchmark::State& state) {
  std::mt19937_64 rng(13);
  auto fam = testing::random_family(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(abs_upper_envelope(fam, 0.0, 2 * std::numbers::pi, M).size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Envelope<EnvelopeMethod::hull>)->RangeMultiplier(4)->Range(4, 256)->Complexity();
BENCHMARK(BM_Envelope<EnvelopeMethod::sweep>)->RangeMultiplier(4)->Range(4, 256)->Complexity();

}  // namespace

BENCHMARK_MAIN();
