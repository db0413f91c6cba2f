#include <benchmark/benchmark.h>

#include "jchi/canonical.hpp"
#include "jchi/chi.hpp"
#include "jchi/enumerate.hpp"
#include "jchi/matrix_tree.hpp"
#include "jchi/stability.hpp"

using namespace jchi;

namespace {

const std::vector<StableGraph>& sample() {
  static const auto graphs = enumerate_stable_graphs(2, 3, false);
  return graphs;
}

void BM_CanonicalKey(benchmark::State& state) {
  const auto& graphs = sample();
  for (auto _ : state) {
    for (const StableGraph& g : graphs) benchmark::DoNotOptimize(canonical_key(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_CanonicalKey)->Unit(benchmark::kMillisecond);

void BM_SpanningTreeCount(benchmark::State& state) {
  const auto& graphs = sample();
  for (auto _ : state) {
    for (const StableGraph& g : graphs) benchmark::DoNotOptimize(spanning_tree_count(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_SpanningTreeCount)->Unit(benchmark::kMillisecond);

void BM_EnumerateGenus0(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(for_each_stable_graph(0, n, false, [](const StableGraph&) {}));
  }
}
BENCHMARK(BM_EnumerateGenus0)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_ChiBar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chi_bar(0, n));
}
BENCHMARK(BM_ChiBar)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_JacobianStrata(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chi_jacobian_strata(2, 3));
}
BENCHMARK(BM_JacobianStrata)->Unit(benchmark::kMillisecond);

void BM_SigmaFromPolarization(benchmark::State& state) {
  const StableGraph g({0, 0, 0}, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}}, {0});
  const Polarization phi = {Rational::parse("1/7"), Rational::parse("2/5"), Rational::parse("-19/35")};
  for (auto _ : state) benchmark::DoNotOptimize(sigma_from_polarization(g, phi, 0));
}
BENCHMARK(BM_SigmaFromPolarization)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
