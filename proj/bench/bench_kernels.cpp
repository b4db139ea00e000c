// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>

#include "crclab/constructions.hpp"
#include "crclab/graph.hpp"
#include "crclab/regularity.hpp"
#include "crclab/spectrum.hpp"

namespace {

using namespace crclab;

const CosetTable& table_for(std::size_t m) {
  static std::map<std::size_t, CosetTable> cache;
  auto it = cache.find(m);
  if (it == cache.end()) {
    it = cache.emplace(m, build_coset_table(build_cm(m))).first;
  }
  return it->second;
}

const Graph& graph_for(std::size_t m) {
  static std::map<std::size_t, Graph> cache;
  auto it = cache.find(m);
  if (it == cache.end()) {
    it = cache.emplace(m, build_coset_graph(build_cm(m), table_for(m)).graph).first;
  }
  return it->second;
}

void BM_ProfileSerial(benchmark::State& state) {
  const auto& table = table_for(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::intersection_profile(table));
  }
}

void BM_ProfileParallel(benchmark::State& state) {
  const auto& table = table_for(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersection_profile(table));
  }
}

void BM_CharacterSerial(benchmark::State& state) {
  const auto code = build_cm(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::character_spectrum(code));
  }
}

void BM_CharacterParallel(benchmark::State& state) {
  const auto code = build_cm(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(character_spectrum(code));
  }
}

void BM_DistancesSerial(benchmark::State& state) {
  const auto& g = graph_for(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::all_pairs_distances(g));
  }
}

void BM_DistancesParallel(benchmark::State& state) {
  const auto& g = graph_for(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_pairs_distances(g));
  }
}

void BM_DrgSerial(benchmark::State& state) {
  const auto& g = graph_for(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::distance_regular_check(g));
  }
}

void BM_DrgParallel(benchmark::State& state) {
  const auto& g = graph_for(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_regular_check(g));
  }
}

}  // namespace

BENCHMARK(BM_ProfileSerial)->DenseRange(14, 18, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProfileParallel)->DenseRange(14, 18, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharacterSerial)->DenseRange(14, 18, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharacterParallel)->DenseRange(14, 18, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistancesSerial)->DenseRange(9, 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistancesParallel)->DenseRange(9, 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DrgSerial)->DenseRange(9, 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DrgParallel)->DenseRange(9, 12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
