// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "utg/graph.hpp"
#include "utg/kernels.hpp"
#include "utg/ring.hpp"

namespace {

const utg::QuotientRing& big_ring() {
  static const auto r = utg::build_quotient_ring(utg::parse_ring_spec("Z/30030"));
  return r;
}

const utg::Graph& mid_graph() {
  static const auto g = utg::build_graph(utg::build_quotient_ring(utg::parse_ring_spec("Z/1155"))).graph();
  return g;
}

const utg::Graph& census_graph() {
  static const auto g = utg::build_graph(utg::build_quotient_ring(utg::parse_ring_spec("Z/221"))).graph();
  return g;
}

template <bool Parallel>
void UnitRuns(benchmark::State& state) {
  const auto& r = big_ring();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? utg::kernels::count_unit_runs(r, 4) : utg::kernels::serial::count_unit_runs(r, 4));
  }
}

template <bool Parallel>
void Census(benchmark::State& state) {
  const auto& g = census_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? utg::kernels::clique_census(g, 4) : utg::kernels::serial::clique_census(g, 4));
  }
}

template <bool Parallel>
void Eccentricities(benchmark::State& state) {
  const auto& g = mid_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? utg::kernels::eccentricities(g) : utg::kernels::serial::eccentricities(g));
  }
}

template <bool Parallel>
void Girth(benchmark::State& state) {
  const auto& g = mid_graph();
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? utg::kernels::girth(g) : utg::kernels::serial::girth(g));
}

template <bool Parallel>
void CommonNeighbors(benchmark::State& state) {
  const auto& g = mid_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? utg::kernels::common_neighbor_matrix(g)
                                      : utg::kernels::serial::common_neighbor_matrix(g));
  }
}

}  // namespace

BENCHMARK(UnitRuns<false>)->Name("unit_runs/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(UnitRuns<true>)->Name("unit_runs/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(Census<false>)->Name("clique_census/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(Census<true>)->Name("clique_census/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(Eccentricities<false>)->Name("eccentricities/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(Eccentricities<true>)->Name("eccentricities/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(Girth<false>)->Name("girth/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(Girth<true>)->Name("girth/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(CommonNeighbors<false>)->Name("common_neighbors/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(CommonNeighbors<true>)->Name("common_neighbors/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
