// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include <map>

#include "edgenet/generator.hpp"
#include "edgenet/harness.hpp"
#include "edgenet/parallel.hpp"

using namespace edgenet;

namespace {

const Multigraph& sample_graph(std::int64_t n) {
  static std::map<std::int64_t, Multigraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate(Params(0.5, 1.0), n, 1)).first;
  return it->second;
}

template <auto Kernel>
void BM_DegreeCounts(benchmark::State& state) {
  const Multigraph& g = sample_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g.edges(), g.num_vertices()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_LogAffineSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(1.0, 0.5, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <ExecutionPolicy Policy>
void BM_Replicates(benchmark::State& state) {
  for (auto _ : state) {
    auto sizes = map_indexed(
        16, [](std::size_t i) { return generate(Params(0.5, 1.0), 20000, replicate_seed(0, i)).num_vertices(); },
        Policy);
    benchmark::DoNotOptimize(sizes);
  }
}

}  // namespace

BENCHMARK(BM_DegreeCounts<serial::degree_counts>)->Name("degree_counts/serial")->Range(1 << 14, 1 << 20);
BENCHMARK(BM_DegreeCounts<omp::degree_counts>)->Name("degree_counts/omp")->Range(1 << 14, 1 << 20);
BENCHMARK(BM_LogAffineSum<serial::log_affine_sum>)->Name("log_affine_sum/serial")->Range(1 << 14, 1 << 22);
BENCHMARK(BM_LogAffineSum<omp::log_affine_sum>)->Name("log_affine_sum/omp")->Range(1 << 14, 1 << 22);
BENCHMARK(BM_Replicates<ExecutionPolicy::serial>)->Name("replicates/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Replicates<ExecutionPolicy::parallel>)->Name("replicates/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
