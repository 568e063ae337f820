#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "curvlab/pencil.hpp"
#include "curvlab/rng.hpp"

namespace {

void BM_PencilMinEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  curvlab::Rng rng(2);
  Eigen::MatrixXd c = Eigen::MatrixXd::NullaryExpr(n, n, [&](int, int) { return rng.normal(); });
  Eigen::MatrixXd b = Eigen::MatrixXd::NullaryExpr(n, n / 2, [&](int, int) { return rng.normal(); });
  const Eigen::MatrixXd right = b * b.transpose();
  const Eigen::MatrixXd left = c * c.transpose();
  for (auto _ : state) {
    auto sol = curvlab::pencil_min_eig(left, right);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_PencilMinEig)->Arg(16)->Arg(64)->Arg(256);

void BM_SphereSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  curvlab::Rng rng(3);
  Eigen::MatrixXd a = Eigen::MatrixXd::NullaryExpr(n, n, [&](int, int) { return rng.normal(); });
  const Eigen::MatrixXd m = 0.5 * (a + a.transpose());
  curvlab::SphereSearchConfig cfg;
  cfg.samples = 128;
  cfg.steps = 50;
  for (auto _ : state) {
    auto result = curvlab::sphere_search(
        [&](const Eigen::VectorXd& v) { return v.dot(m * v); }, n, cfg);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_SphereSearch)->Arg(8)->Arg(24);

}  // namespace
