// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include "hypcox/catalog.hpp"
#include "hypcox/grow.hpp"
#include "hypcox/leech.hpp"

using namespace hypcox;

static void BM_ShellSerial(benchmark::State& state) {
  const int norm = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shell_count_serial(norm));
}
BENCHMARK(BM_ShellSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ShellParallel(benchmark::State& state) {
  const int norm = static_cast<int>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(shell_count(norm, workers));
}
BENCHMARK(BM_ShellParallel)->ArgsProduct({{4, 6}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_TreeDoubleSerial(benchmark::State& state) {
  const Polyhedron p = bugaenko_h6();
  const std::vector<int> walls = {p.wall("9"), p.wall("19"), p.wall("25")};
  const auto family = branch_spaced_subtrees(3, 7, 2);
  for (auto _ : state) {
    for (const auto& t : family) benchmark::DoNotOptimize(tree_double(p, walls, t));
  }
}
BENCHMARK(BM_TreeDoubleSerial)->Unit(benchmark::kMillisecond);

static void BM_TreeDoubleParallel(benchmark::State& state) {
  const Polyhedron p = bugaenko_h6();
  const std::vector<int> walls = {p.wall("9"), p.wall("19"), p.wall("25")};
  const auto family = branch_spaced_subtrees(3, 7, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tree_double_all(p, walls, family));
}
BENCHMARK(BM_TreeDoubleParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
