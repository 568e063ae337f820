#include <benchmark/benchmark.h>

#include "curvlab/qms.hpp"
#include "curvlab/qms_curvature.hpp"
#include "curvlab/rng.hpp"

namespace {

using curvlab::Matx;

void BM_QmsBakryEmery(benchmark::State& state) {
  const auto gen = curvlab::QmsGenerator::depolarizing(static_cast<int>(state.range(0)));
  curvlab::QmsCurvatureConfig cfg;
  cfg.samples = 32;
  cfg.steps = 16;
  for (auto _ : state) {
    auto report = curvlab::be_curvature_qms(gen, cfg);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_QmsBakryEmery)->Arg(2)->Arg(3)->Arg(4);

void BM_QmsIntertwining(benchmark::State& state) {
  const auto gen = curvlab::QmsGenerator::depolarizing(static_cast<int>(state.range(0)));
  const curvlab::Fodc fodc(gen);
  const auto hodge = curvlab::splitting_hodge_qms(fodc, 0.75);
  curvlab::QmsCurvatureConfig cfg;
  cfg.samples = 16;
  cfg.steps = 8;
  for (auto _ : state) {
    auto report = curvlab::intertwining_curvature_qms(fodc, hodge, cfg);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_QmsIntertwining)->Arg(2)->Arg(3);

void BM_LambdaNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto gen = curvlab::QmsGenerator::depolarizing(n);
  const curvlab::Fodc fodc(gen);
  const auto mean = curvlab::builtin_mean("logarithmic");
  curvlab::Rng rng(5);
  const Matx rho = rng.density(n);
  std::vector<Matx> xi(fodc.jump_count());
  for (int j = 0; j < fodc.jump_count(); ++j) xi[j] = rng.complex_matrix(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvlab::lambda_norm(fodc, mean, rho, xi));
  }
}
BENCHMARK(BM_LambdaNorm)->Arg(2)->Arg(4)->Arg(6);

void BM_GeDerivativeEstimate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto gen = curvlab::QmsGenerator::depolarizing(n);
  const auto mean = curvlab::builtin_mean("logarithmic");
  curvlab::Rng rng(7);
  const Matx a = rng.hermitian(n);
  const Matx rho = rng.density(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvlab::ge_derivative_estimate(gen, mean, a, rho));
  }
}
BENCHMARK(BM_GeDerivativeEstimate)->Arg(2)->Arg(3)->Arg(4);

}  // namespace
