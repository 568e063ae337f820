#include "curvlab/instances.hpp"

#include <stdexcept>
#include <string>

namespace curvlab {

namespace {

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

WeightedGraph make_complete_graph(const Eigen::VectorXd& m) {
  const int n = static_cast<int>(m.size());
  GraphSpec spec;
  spec.vertices = numbered_labels(n);
  for (int i = 0; i < n; ++i) spec.m[spec.vertices[i]] = m(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      spec.edges.emplace_back(spec.vertices[i], spec.vertices[j], m(i) * m(j));
  return WeightedGraph::build(spec);
}

WeightedGraph make_uniform_complete_graph(int n) {
  return make_complete_graph(Eigen::VectorXd::Constant(n, 1.0 / n));
}

WeightedGraph make_two_point(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("two-point parameter must lie in (0,1)");
  GraphSpec spec;
  spec.vertices = {"0", "1"};
  spec.m["0"] = lambda;
  spec.m["1"] = 1.0 - lambda;
  spec.edges.emplace_back("0", "1", lambda * (1.0 - lambda));
  return WeightedGraph::build(spec);
}

WeightedGraph make_path3() {
  GraphSpec spec;
  spec.vertices = {"0", "1", "2"};
  for (const auto& v : spec.vertices) spec.m[v] = 4.0;
  spec.edges.emplace_back("0", "1", 1.0);
  spec.edges.emplace_back("1", "2", 1.0);
  return WeightedGraph::build(spec);
}

WeightedGraph make_three_vertex(double eps) {
  GraphSpec spec;
  spec.vertices = {"1", "2", "3"};
  spec.m["1"] = 1.0 / eps;
  spec.m["2"] = 1.0;
  spec.m["3"] = 1.0 / 20.0;
  spec.edges.emplace_back("1", "2", 10.0);
  spec.edges.emplace_back("2", "3", 1.0);
  return WeightedGraph::build(spec);
}

MappingRep make_hypercube(int d, double kappa) {
  if (d < 1) throw std::invalid_argument("hypercube dimension must be >= 1");
  const int n = 1 << d;
  GraphSpec spec;
  spec.vertices = numbered_labels(n);
  for (const auto& v : spec.vertices) spec.m[v] = 1.0 / n;
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < d; ++i) {
      const int y = x ^ (1 << i);
      if (x < y) spec.edges.emplace_back(spec.vertices[x], spec.vertices[y], kappa / n);
    }
  }
  const WeightedGraph g = WeightedGraph::build(spec);

  MappingRepSpec mspec;
  mspec.maps.resize(d);
  mspec.rates = Eigen::MatrixXd::Constant(n, d, kappa);
  mspec.inverse.resize(d);
  for (int i = 0; i < d; ++i) {
    mspec.maps[i].resize(n);
    for (int x = 0; x < n; ++x) mspec.maps[i][x] = x ^ (1 << i);
    mspec.inverse[i] = i;
  }
  return MappingRep::build(g, mspec);
}

MappingRep make_cycle(int k, double kappa) {
  if (k < 3) throw std::invalid_argument("cycle length must be >= 3");
  GraphSpec spec;
  spec.vertices = numbered_labels(k);
  for (const auto& v : spec.vertices) spec.m[v] = 1.0 / k;
  for (int x = 0; x < k; ++x)
    spec.edges.emplace_back(spec.vertices[x], spec.vertices[(x + 1) % k], kappa / k);
  const WeightedGraph g = WeightedGraph::build(spec);

  MappingRepSpec mspec;
  mspec.maps.resize(2);
  mspec.maps[0].resize(k);
  mspec.maps[1].resize(k);
  for (int x = 0; x < k; ++x) {
    mspec.maps[0][x] = (x + 1) % k;
    mspec.maps[1][x] = (x + k - 1) % k;
  }
  mspec.rates = Eigen::MatrixXd::Constant(k, 2, kappa);
  mspec.inverse = {1, 0};
  return MappingRep::build(g, mspec);
}

MappingRep make_two_point_duplicate_swap(double c1, double c2) {
  GraphSpec spec;
  spec.vertices = {"0", "1"};
  spec.m["0"] = 1.0;
  spec.m["1"] = 1.0;
  spec.edges.emplace_back("0", "1", c1 + c2);
  const WeightedGraph g = WeightedGraph::build(spec);

  MappingRepSpec mspec;
  mspec.maps = {{1, 0}, {1, 0}};
  mspec.rates.resize(2, 2);
  mspec.rates << c1, c2, c1, c2;
  mspec.inverse = {0, 1};
  return MappingRep::build(g, mspec);
}

}  // namespace curvlab
