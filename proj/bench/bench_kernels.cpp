#include <benchmark/benchmark.h>

#include <map>

#include "bendmin/pipeline.hpp"

using namespace bendmin;

namespace {

const PipelineResult& instance(int n) {
  static std::map<int, PipelineResult> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    GeneratorSpec spec;
    spec.vertices = n;
    spec.seed = 20240601;
    it = cache.emplace(n, run_pipeline(std::make_shared<const PlaneGraph>(generate_sp(spec)))).first;
  }
  return it->second;
}

void BM_CheckSerial(benchmark::State& state) {
  const auto& r = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_representation(r.representation).ok);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CheckParallel(benchmark::State& state) {
  const auto& r = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_representation_parallel(r.representation).ok);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OracleSerial(benchmark::State& state) {
  auto specs = oracle_batch_specs(1, static_cast<int>(state.range(0)), 30);
  for (auto _ : state) benchmark::DoNotOptimize(compare_batch(specs).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OracleParallel(benchmark::State& state) {
  auto specs = oracle_batch_specs(1, static_cast<int>(state.range(0)), 30);
  for (auto _ : state) benchmark::DoNotOptimize(compare_batch_parallel(specs).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_CheckSerial)->Arg(10000)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CheckParallel)->Arg(10000)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleParallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
