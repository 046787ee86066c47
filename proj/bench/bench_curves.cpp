#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "sextic/curves.hpp"

using namespace sextic;

namespace {

const std::vector<double>& n0_grid() {
  static const std::vector<double> g = make_grid(-4.0, 4.0, 0.05);
  return g;
}

const std::vector<double>& n1_grid() {
  static const std::vector<double> g = make_grid(-6.0, -1.0, 0.05);
  return g;
}

std::vector<int> first(int n) {
  std::vector<int> b;
  for (int k = 1; k <= n; ++k) b.push_back(k);
  return b;
}

void BM_RootTableSerial(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const auto& grid = level == 0 ? n0_grid() : n1_grid();
  for (auto _ : state) benchmark::DoNotOptimize(locate_branches_serial(level, 10, grid));
}

void BM_RootTableParallel(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  const auto& grid = level == 0 ? n0_grid() : n1_grid();
  omp_set_num_threads(threads > 0 ? threads : omp_get_num_procs());
  for (auto _ : state) benchmark::DoNotOptimize(locate_branches(level, 10, grid));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_TraceSerial(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const auto& grid = level == 0 ? n0_grid() : n1_grid();
  for (auto _ : state)
    for (int n = 1; n <= 10; ++n) benchmark::DoNotOptimize(trace_curve(level, n, grid));
}

void BM_TraceParallel(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  const auto& grid = level == 0 ? n0_grid() : n1_grid();
  omp_set_num_threads(threads > 0 ? threads : omp_get_num_procs());
  for (auto _ : state) benchmark::DoNotOptimize(trace_curves(level, first(10), grid));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

// Second argument 0 means all available processors.
BENCHMARK(BM_RootTableSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootTableParallel)->Args({0, 1})->Args({0, 0})->Args({1, 1})->Args({1, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceParallel)->Args({0, 1})->Args({0, 0})->Args({1, 1})->Args({1, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
