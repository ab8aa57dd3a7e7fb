#include <benchmark/benchmark.h>

#include "cubescheme/classgen.hpp"
#include "cubescheme/closure.hpp"
#include "cubescheme/compression.hpp"
#include "cubescheme/spc.hpp"
#include "cubescheme/vc_analysis.hpp"

using namespace cubescheme;

namespace {

ConceptClass maximum_class(int n, int d) { return generate({Family::random_maximum, n, d, 0.1, 7, {}}); }

ConceptClass closed_class(int n) { return generate({Family::downward_closed, n, 3, 0.05, 7, {}}); }

void BM_Classify(benchmark::State& state) {
  const auto c = maximum_class(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(classify(c));
  state.counters["size"] = static_cast<double>(c.size());
}

void BM_EnumerateCubes(benchmark::State& state) {
  const auto c = maximum_class(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cubes(c, true));
}

void BM_IntersectionClosure(benchmark::State& state) {
  const auto c = generate({Family::random_extremal_vc2, static_cast<int>(state.range(0)), 2, 0.1, 3, {}});
  for (auto _ : state) benchmark::DoNotOptimize(intersection_closure(c));
}

void BM_MinKClose(benchmark::State& state) {
  const auto c = generate({Family::random_extremal_vc2, static_cast<int>(state.range(0)), 2, 0.1, 3, {}});
  for (auto _ : state) benchmark::DoNotOptimize(min_k_close(c));
}

void BM_ShortestPathClosure(benchmark::State& state) {
  const auto c = closed_class(static_cast<int>(state.range(0)));
  const auto ord = CoordinateOrdering::identity(c.dim());
  for (auto _ : state) benchmark::DoNotOptimize(shortest_path_closure(c, ord));
  state.counters["size"] = static_cast<double>(c.size());
}

void BM_CornerPeel(benchmark::State& state) {
  const auto c = maximum_class(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(corner_peel(c));
}

void BM_BuildScheme(benchmark::State& state) {
  const auto c = maximum_class(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(build_scheme(c));
  state.counters["size"] = static_cast<double>(c.size());
}

void BM_RoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto c = maximum_class(n, 2);
  const auto domains = all_domains(n);
  for (auto _ : state) {
    SchemeCache cache;
    benchmark::DoNotOptimize(roundtrip_check(c, domains, cache, 1));
  }
}

}  // namespace

BENCHMARK(BM_Classify)->DenseRange(6, 12, 2);
BENCHMARK(BM_EnumerateCubes)->DenseRange(6, 12, 2);
BENCHMARK(BM_IntersectionClosure)->DenseRange(6, 12, 2);
BENCHMARK(BM_MinKClose)->DenseRange(4, 8, 2);
BENCHMARK(BM_ShortestPathClosure)->DenseRange(6, 12, 2);
BENCHMARK(BM_CornerPeel)->DenseRange(6, 12, 2);
BENCHMARK(BM_BuildScheme)->ArgsProduct({{6, 8}, {2, 3}});
BENCHMARK(BM_RoundTrip)->DenseRange(4, 7, 1);

BENCHMARK_MAIN();
