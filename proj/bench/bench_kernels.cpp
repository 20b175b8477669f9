// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "regionkit/constructions.hpp"
#include "regionkit/harness.hpp"
#include "regionkit/voxmap.hpp"

namespace {

using namespace regionkit;

VoxelMap big_solid(std::size_t side) { return extrude(random_map2d(side, side, 40, 7), side / 2); }

void BM_DualSerial(benchmark::State& state) {
  const VoxelMap m = big_solid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::dual_graph_serial(m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.cell_count()));
}

void BM_DualParallel(benchmark::State& state) {
  const VoxelMap m = big_solid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dual_graph(m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.cell_count()));
}

void BM_DualGeneratingElement(benchmark::State& state) {
  const GeneratingElement el = generating_element(planar_k4_map(), Coloring({0, 1, 2, 3}));
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? dual_graph(el.map3d) : reference::dual_graph_serial(el.map3d));
  }
}

void hadwiger(benchmark::State& state, Execution exec) {
  HadwigerSweepConfig c;
  c.trials = static_cast<std::size_t>(state.range(0));
  c.max_nodes = 12;
  for (auto _ : state) benchmark::DoNotOptimize(hadwiger_sweep(c, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_HadwigerSweepSerial(benchmark::State& state) { hadwiger(state, Execution::kSerial); }
void BM_HadwigerSweepParallel(benchmark::State& state) { hadwiger(state, Execution::kParallel); }

void planar(benchmark::State& state, Execution exec) {
  PlanarSweepConfig c;
  c.trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(planar_sweep(c, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PlanarSweepSerial(benchmark::State& state) { planar(state, Execution::kSerial); }
void BM_PlanarSweepParallel(benchmark::State& state) { planar(state, Execution::kParallel); }

void slices(benchmark::State& state, Execution exec) {
  SliceSweepConfig c;
  c.trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(slice_sweep(c, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SliceSweepSerial(benchmark::State& state) { slices(state, Execution::kSerial); }
void BM_SliceSweepParallel(benchmark::State& state) { slices(state, Execution::kParallel); }

}  // namespace

BENCHMARK(BM_DualSerial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualParallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualGeneratingElement)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_HadwigerSweepSerial)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HadwigerSweepParallel)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PlanarSweepSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PlanarSweepParallel)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SliceSweepSerial)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SliceSweepParallel)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
