#include "tiletopo/chains.hpp"
#include "tiletopo/parametrization.hpp"
#include "tiletopo/render.hpp"
#include "tiletopo/topology.hpp"

#include <benchmark/benchmark.h>

using namespace tiletopo;

namespace {

TileParams params_of(const benchmark::State& state) { return TileParams::make(state.range(0), state.range(1)); }

void BM_NeighborSearch(benchmark::State& state) {
  const auto p = params_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(neighbor_set_search(p));
}
BENCHMARK(BM_NeighborSearch)->Args({4, 5})->Args({5, 5})->Args({11, 12});

void BM_ContactGraphAndOrder(benchmark::State& state) {
  const auto p = params_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(derive_order_extension(build_contact_graph(p)));
}
BENCHMARK(BM_ContactGraphAndOrder)->Args({2, 2})->Args({4, 5})->Args({11, 12});

void BM_Perron(benchmark::State& state) {
  const auto g = build_contact_graph(params_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(perron_data(g));
}
BENCHMARK(BM_Perron)->Args({2, 2})->Args({4, 5});

void BM_ApproxBoundary(benchmark::State& state) {
  const auto og = derive_order_extension(build_contact_graph(TileParams::make(4, 5)));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(approx_boundary(n, og));
}
BENCHMARK(BM_ApproxBoundary)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_CutPoint(benchmark::State& state) {
  const auto p = params_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_cut_point(p));
}
BENCHMARK(BM_CutPoint)->Args({5, 5})->Args({12, 12})->Unit(benchmark::kMicrosecond);

void BM_CircularChain(benchmark::State& state) {
  const auto sys = build_curve_system(params_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(verify_circular_chain(sys));
}
BENCHMARK(BM_CircularChain)->Args({4, 5})->Args({6, 9})->Unit(benchmark::kMillisecond);

void BM_SubdivisionReplay(benchmark::State& state) {
  const auto p = params_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(replay_subdivision_rules(p));
}
BENCHMARK(BM_SubdivisionReplay)->Args({4, 5})->Args({5, 7})->Unit(benchmark::kMillisecond);

void BM_RenderPatch(benchmark::State& state) {
  const auto p = params_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(render_patch(p, 3));
}
BENCHMARK(BM_RenderPatch)->Args({4, 5})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
