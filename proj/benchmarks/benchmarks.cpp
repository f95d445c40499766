#include <benchmark/benchmark.h>

#include "rtd/canonical.hpp"
#include "rtd/clique.hpp"
#include "rtd/constructions.hpp"
#include "rtd/qp.hpp"
#include "rtd/rt_search.hpp"
#include "rtd/verify.hpp"

namespace {

using namespace rtd;

void BM_MaxCliqueKklColourTwo(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int s = n / 60;
  const auto k = kkl_36({n, 4 * s, 4 * s, 2 * s, RuleVariant::kFigureConsistent});
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(k.graph.color_class(2)));
}
BENCHMARK(BM_MaxCliqueKklColourTwo)->Arg(60)->Arg(120);

void BM_IndependenceAndrasfaiBlowup(benchmark::State& state) {
  const Graph g = blowup(andrasfai(static_cast<int>(state.range(0))), 3);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_IndependenceAndrasfaiBlowup)->DenseRange(3, 6);

void BM_KklConstruction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int s = n / 60;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kkl_36({n, 4 * s, 4 * s, 2 * s, RuleVariant::kFigureConsistent}));
}
BENCHMARK(BM_KklConstruction)->Arg(60)->Arg(120)->Arg(240);

void BM_CheckColoredFreeKkl(benchmark::State& state) {
  const auto k = kkl_36({60, 4, 4, 2, RuleVariant::kFigureConsistent});
  for (auto _ : state) benchmark::DoNotOptimize(check_colored_free(k.graph, 3, 6));
}
BENCHMARK(BM_CheckColoredFreeKkl);

void BM_FreeColoringComplete(benchmark::State& state) {
  const Graph g = Graph::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_free_coloring(g, 3, 3));
}
BENCHMARK(BM_FreeColoringComplete)->Arg(5)->Arg(6);

void BM_RtExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rt_exact({n, 3, 4, 2}));
}
BENCHMARK(BM_RtExact)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_GraphClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_graphs_up_to_isomorphism(n));
}
BENCHMARK(BM_GraphClasses)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_MaximizeF(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(maximize_f());
}
BENCHMARK(BM_MaximizeF)->Unit(benchmark::kMillisecond);

void BM_MaximizeG(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(maximize_g());
}
BENCHMARK(BM_MaximizeG)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
