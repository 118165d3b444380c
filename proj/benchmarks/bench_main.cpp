#include <benchmark/benchmark.h>

#include "entcol/acyclic.hpp"
#include "entcol/bounds.hpp"
#include "entcol/dyck.hpp"
#include "entcol/graph.hpp"
#include "entcol/star.hpp"

using namespace entcol;

namespace {

Graph bench_graph(std::size_t n, std::size_t delta) {
  return generate_graph(GraphModel::RandomMaxDegree, {.n = n, .delta = delta}, 7);
}

// K = 4Δ-3, the regime of the expected-steps bound.
void BM_AcyclicRun(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto delta = static_cast<std::size_t>(state.range(1));
  const Graph g = bench_graph(n, delta);
  const auto k = static_cast<Color>(4 * delta - 3);
  const auto rank = static_cast<std::uint32_t>(rank_capacity(k, delta));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto out = run(g, {.colors = k, .rank_bound = rank, .source = seed++});
    benchmark::DoNotOptimize(out.steps);
  }
  state.counters["edges"] = static_cast<double>(g.num_edges());
}
BENCHMARK(BM_AcyclicRun)->Args({200, 4})->Args({1000, 6})->Args({2000, 10});

// Tight palette from the girth bound; exercises the conflict path.
void BM_AcyclicRunTight(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)), 6);
  const auto stats = compute_stats(g);
  const auto b = acyclic_color_bound(stats.delta, stats.girth);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto out = run(g, {.colors = b.colors, .rank_bound = b.rank_bound, .source = seed++});
    benchmark::DoNotOptimize(out.steps);
  }
}
BENCHMARK(BM_AcyclicRunTight)->Arg(200)->Arg(1000);

void BM_StarRun(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)), 5);
  StarConfig cfg;
  cfg.k = 2;
  cfg.rank_bound = star_color_bound(g.max_degree(), 2).rank_bound;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.source = seed++;
    auto out = run_star(g, cfg);
    benchmark::DoNotOptimize(out.steps);
  }
}
BENCHMARK(BM_StarRun)->Arg(200)->Arg(1000);

void BM_DyckTree(benchmark::State& state) {
  const auto e = DescentSet::parse("2N+4");
  const auto t = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_dyck_table(t, e));
}
BENCHMARK(BM_DyckTree)->Arg(200)->Arg(1000);

void BM_DyckWalk(benchmark::State& state) {
  const auto e = DescentSet::parse("2N+4");
  const auto t = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_dyck_walk_table(t, e));
}
BENCHMARK(BM_DyckWalk)->Arg(200)->Arg(1000);

void BM_SolveCharacteristic(benchmark::State& state) {
  const auto e = DescentSet::progression(static_cast<std::uint32_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_characteristic(e).tau);
}
BENCHMARK(BM_SolveCharacteristic)->Arg(4)->Arg(52)->Arg(218);

}  // namespace

BENCHMARK_MAIN();
