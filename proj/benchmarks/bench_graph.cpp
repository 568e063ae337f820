#include <benchmark/benchmark.h>

#include "curvlab/graph_curvature.hpp"
#include "curvlab/graph_ge.hpp"
#include "curvlab/instances.hpp"

namespace {

void BM_BakryEmeryCompleteGraph(benchmark::State& state) {
  const auto g = curvlab::make_uniform_complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto report = curvlab::bakry_emery_curvature(g);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_BakryEmeryCompleteGraph)->Arg(4)->Arg(8)->Arg(12);

void BM_IntertwiningIdle(benchmark::State& state) {
  const auto g = curvlab::make_uniform_complete_graph(static_cast<int>(state.range(0)));
  const auto hodge = curvlab::idle_hodge(g);
  for (auto _ : state) {
    auto report = curvlab::intertwining_curvature(g, hodge);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_IntertwiningIdle)->Arg(4)->Arg(6)->Arg(8);

void BM_GeSearchTwoPoint(benchmark::State& state) {
  const auto g = curvlab::make_two_point(0.3);
  const auto mean = curvlab::builtin_mean("logarithmic");
  curvlab::GeSearchConfig cfg;
  cfg.samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = curvlab::ge_curvature_search(g, mean, cfg);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_GeSearchTwoPoint)->Arg(128)->Arg(1024);

void BM_MappingHypercube(benchmark::State& state) {
  const auto cube = curvlab::make_hypercube(static_cast<int>(state.range(0)), 1.0);
  const auto hodge =
      curvlab::mapping_hodge(cube, curvlab::MappingHodge::Variant::Involutive, 2.0);
  for (auto _ : state) {
    auto report = curvlab::intertwining_curvature_mapping(cube, hodge);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_MappingHypercube)->Arg(2)->Arg(3)->Arg(4);

}  // namespace
