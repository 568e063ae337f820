#include "curvlab/graph.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace curvlab {

WeightedGraph WeightedGraph::build(const GraphSpec& spec) {
  WeightedGraph g;
  const int n = static_cast<int>(spec.vertices.size());
  if (n == 0) throw std::invalid_argument("graph has no vertices");

  g.labels_ = spec.vertices;
  for (int i = 0; i < n; ++i) {
    if (!g.index_.emplace(spec.vertices[i], i).second)
      throw std::invalid_argument("duplicate vertex '" + spec.vertices[i] + "'");
  }

  g.m_.resize(n);
  for (int i = 0; i < n; ++i) {
    auto it = spec.m.find(spec.vertices[i]);
    if (it == spec.m.end())
      throw std::invalid_argument("measure missing for vertex '" + spec.vertices[i] + "'");
    if (!(it->second > 0.0))
      throw std::invalid_argument("nonpositive measure at vertex '" + spec.vertices[i] + "'");
    g.m_(i) = it->second;
  }

  g.b_ = Eigen::MatrixXd::Zero(n, n);
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v, w] : spec.edges) {
    auto iu = g.index_.find(u);
    auto iv = g.index_.find(v);
    if (iu == g.index_.end()) throw std::invalid_argument("unknown vertex '" + u + "' in edge");
    if (iv == g.index_.end()) throw std::invalid_argument("unknown vertex '" + v + "' in edge");
    if (iu->second == iv->second)
      throw std::invalid_argument("self-loop at vertex '" + u + "'");
    if (w < 0.0)
      throw std::invalid_argument("negative edge weight on (" + u + ", " + v + ")");
    auto key = std::minmax(iu->second, iv->second);
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate edge (" + u + ", " + v + ")");
    g.b_(iu->second, iv->second) = w;
    g.b_(iv->second, iu->second) = w;
  }

  g.edge_lookup_ = Eigen::MatrixXd::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g.b_(x, y) > 0.0) {
        g.edges_.emplace_back(x, y);
        g.edge_lookup_(x, y) = static_cast<double>(g.edges_.size());
      }
    }
  }
  const int ne = static_cast<int>(g.edges_.size());
  g.reversed_.resize(ne);
  g.half_weight_.resize(ne);
  g.grad_ = Eigen::MatrixXd::Zero(ne, n);
  for (int e = 0; e < ne; ++e) {
    auto [x, y] = g.edges_[e];
    g.reversed_[e] = g.edge_index(y, x);
    g.half_weight_(e) = 0.5 * g.b_(x, y);
    g.grad_(e, x) = 1.0;
    g.grad_(e, y) = -1.0;
  }

  g.laplacian_ = Eigen::MatrixXd::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    double deg = 0.0;
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      const double p = g.b_(x, y) / g.m_(x);
      deg += p;
      g.laplacian_(x, y) = -p;
    }
    g.laplacian_(x, x) = deg;
  }
  return g;
}

int WeightedGraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex '" + label + "'");
  return it->second;
}

double WeightedGraph::degree(int x) const {
  double d = 0.0;
  for (int y = 0; y < size(); ++y) d += b_(x, y);
  return d / m_(x);
}

int WeightedGraph::edge_index(int x, int y) const {
  const double v = edge_lookup_(x, y);
  return v > 0.0 ? static_cast<int>(v) - 1 : -1;
}

Eigen::MatrixXd WeightedGraph::gradient_adjoint_matrix() const {
  // d* = M^{-1} D^T W with W = diag(b/2).
  return m_.cwiseInverse().asDiagonal() * grad_.transpose() *
         half_weight_.asDiagonal().toDenseMatrix();
}

std::complex<double> inner_m(const WeightedGraph& g, const VertexFunction& f,
                             const VertexFunction& h) {
  std::complex<double> s = 0.0;
  for (int x = 0; x < g.size(); ++x) s += std::conj(f(x)) * h(x) * g.measure()(x);
  return s;
}

std::complex<double> inner_edge(const WeightedGraph& g, const EdgeField& xi,
                                const EdgeField& eta) {
  std::complex<double> s = 0.0;
  for (int e = 0; e < g.edge_count(); ++e)
    s += g.edge_half_weight()(e) * std::conj(xi(e)) * eta(e);
  return s;
}

VertexFunction apply_laplacian(const WeightedGraph& g, const VertexFunction& f) {
  return g.laplacian() * f;
}

EdgeField gradient(const WeightedGraph& g, const VertexFunction& f) {
  EdgeField xi(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [x, y] = g.edges()[e];
    xi(e) = f(x) - f(y);
  }
  return xi;
}

VertexFunction gradient_adjoint(const WeightedGraph& g, const EdgeField& xi) {
  VertexFunction out = VertexFunction::Zero(g.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [x, y] = g.edges()[e];
    const double w = g.edge_half_weight()(e);
    out(x) += w * xi(e);
    out(y) -= w * xi(e);
  }
  for (int x = 0; x < g.size(); ++x) out(x) /= g.measure()(x);
  return out;
}

VertexFunction carre_du_champ(const WeightedGraph& g, const VertexFunction& f,
                              const VertexFunction& h) {
  VertexFunction out = VertexFunction::Zero(g.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [x, y] = g.edges()[e];
    out(x) += g.weight()(x, y) * std::conj(f(x) - f(y)) * (h(x) - h(y));
  }
  for (int x = 0; x < g.size(); ++x) out(x) /= 2.0 * g.measure()(x);
  return out;
}

VertexFunction carre_du_champ(const WeightedGraph& g, const VertexFunction& f) {
  return carre_du_champ(g, f, f);
}

VertexFunction gamma2(const WeightedGraph& g, const VertexFunction& f,
                      const VertexFunction& h) {
  const VertexFunction lf = apply_laplacian(g, f);
  const VertexFunction lh = apply_laplacian(g, h);
  return 0.5 * (carre_du_champ(g, lf, h) + carre_du_champ(g, f, lh) -
                apply_laplacian(g, carre_du_champ(g, f, h)));
}

VertexFunction gamma2(const WeightedGraph& g, const VertexFunction& f) {
  return gamma2(g, f, f);
}

Eigen::MatrixXd gamma_form(const WeightedGraph& g, int x) {
  const int n = g.size();
  Eigen::MatrixXd form = Eigen::MatrixXd::Zero(n, n);
  for (int y = 0; y < n; ++y) {
    const double w = g.weight()(x, y);
    if (w <= 0.0) continue;
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    d(x) = 1.0;
    d(y) = -1.0;
    form += w * d * d.transpose();
  }
  return form / (2.0 * g.measure()(x));
}

Eigen::MatrixXd gamma2_form(const WeightedGraph& g, int x) {
  const int n = g.size();
  const Eigen::MatrixXd& lap = g.laplacian();
  const Eigen::MatrixXd gx = gamma_form(g, x);
  Eigen::MatrixXd lg = Eigen::MatrixXd::Zero(n, n);
  for (int y = 0; y < n; ++y) {
    if (lap(x, y) != 0.0) lg += lap(x, y) * gamma_form(g, y);
  }
  return 0.5 * (lap.transpose() * gx + gx * lap - lg);
}

HeatSemigroup::HeatSemigroup(const WeightedGraph& g) {
  const Eigen::VectorXd sqrt_m = g.measure().cwiseSqrt();
  const Eigen::MatrixXd sym = sqrt_m.asDiagonal() * g.laplacian() *
                              sqrt_m.cwiseInverse().asDiagonal().toDenseMatrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (sym + sym.transpose()));
  eigenvalues_ = es.eigenvalues();
  modes_ = sqrt_m.cwiseInverse().asDiagonal() * es.eigenvectors();
  modes_inv_ = es.eigenvectors().transpose() * sqrt_m.asDiagonal().toDenseMatrix();
}

Eigen::MatrixXd HeatSemigroup::at(double t) const {
  if (t < 0.0) throw std::invalid_argument("heat semigroup requires t >= 0");
  return modes_ * (-t * eigenvalues_.array()).exp().matrix().asDiagonal() * modes_inv_;
}

Eigen::MatrixXd heat_kernel(const WeightedGraph& g, double t) {
  return HeatSemigroup(g).at(t);
}

}  // namespace curvlab
