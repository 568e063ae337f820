#ifndef CURVLAB_GRAPH_HPP
#define CURVLAB_GRAPH_HPP

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace curvlab {

using EdgeField = Eigen::VectorXcd;       // indexed by directed edges
using VertexFunction = Eigen::VectorXcd;  // indexed by vertices

/// Raw description of a finite weighted graph: vertex labels, a positive
/// vertex measure m and undirected weighted edge triples (u, v, w).
struct GraphSpec {
  std::vector<std::string> vertices;
  std::map<std::string, double> m;
  std::vector<std::tuple<std::string, std::string, double>> edges;
};

/// Finite weighted graph: vertex set with measure m and symmetric edge
/// weight b vanishing on the diagonal. Vertex ordering is fixed by the input
/// order and all matrix indices refer to it. Immutable after construction.
class WeightedGraph {
 public:
  /// Validates and builds. Throws std::invalid_argument on duplicate
  /// vertices, nonpositive measure, negative weights, self-loops, unknown
  /// vertices in edges or duplicate edges.
  static WeightedGraph build(const GraphSpec& spec);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_[x]; }
  int index_of(const std::string& label) const;

  const Eigen::VectorXd& measure() const { return m_; }
  const Eigen::MatrixXd& weight() const { return b_; }

  /// P(x,y) = b(x,y)/m(x) and deg(x) = sum_y P(x,y).
  double transition(int x, int y) const { return b_(x, y) / m_(x); }
  double degree(int x) const;

  /// Directed edges (x,y) with b(x,y) > 0, both orientations.
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_index(int x, int y) const;  // -1 when not an edge
  int reversed(int e) const { return reversed_[e]; }

  /// b(e)/2 per directed edge; the weights of the edge inner product.
  const Eigen::VectorXd& edge_half_weight() const { return half_weight_; }

  const Eigen::MatrixXd& laplacian() const { return laplacian_; }
  /// Incidence matrix of the discrete gradient, edge_count x size.
  const Eigen::MatrixXd& gradient_matrix() const { return grad_; }
  /// Matrix of the adjoint of the gradient in the weighted inner products.
  Eigen::MatrixXd gradient_adjoint_matrix() const;

 private:
  WeightedGraph() = default;

  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  Eigen::VectorXd m_;
  Eigen::MatrixXd b_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> reversed_;
  Eigen::MatrixXd edge_lookup_;  // edge index + 1, 0 when absent
  Eigen::VectorXd half_weight_;
  Eigen::MatrixXd laplacian_;
  Eigen::MatrixXd grad_;
};

// Inner products of l2(X,m) and l2(X x X, b/2).
std::complex<double> inner_m(const WeightedGraph& g, const VertexFunction& f,
                             const VertexFunction& h);
std::complex<double> inner_edge(const WeightedGraph& g, const EdgeField& xi,
                                const EdgeField& eta);

VertexFunction apply_laplacian(const WeightedGraph& g, const VertexFunction& f);

/// (df)(x,y) = f(x) - f(y) on directed edges.
EdgeField gradient(const WeightedGraph& g, const VertexFunction& f);

/// Adjoint of the gradient: <gradient_adjoint(xi), f>_m = <xi, gradient(f)>_{b/2}.
VertexFunction gradient_adjoint(const WeightedGraph& g, const EdgeField& xi);

/// Carre du champ Gamma(f,h)(x) = (1/2m(x)) sum_y b(x,y) conj(f(x)-f(y)) (h(x)-h(y)).
VertexFunction carre_du_champ(const WeightedGraph& g, const VertexFunction& f,
                              const VertexFunction& h);
VertexFunction carre_du_champ(const WeightedGraph& g, const VertexFunction& f);

/// Iterated form Gamma2(f,h) = (Gamma(Lf,h) + Gamma(f,Lh) - L Gamma(f,h)) / 2.
VertexFunction gamma2(const WeightedGraph& g, const VertexFunction& f,
                      const VertexFunction& h);
VertexFunction gamma2(const WeightedGraph& g, const VertexFunction& f);

/// Real symmetric PSD matrix G_x with f^H G_x h = Gamma(f,h)(x).
Eigen::MatrixXd gamma_form(const WeightedGraph& g, int x);
/// Real symmetric matrix B_x with f^H B_x h = Gamma2(f,h)(x).
Eigen::MatrixXd gamma2_form(const WeightedGraph& g, int x);

/// Heat semigroup P_t = exp(-tL), computed once per graph from the symmetric
/// eigendecomposition of M^{1/2} L M^{-1/2}, M = diag(m).
class HeatSemigroup {
 public:
  explicit HeatSemigroup(const WeightedGraph& g);
  /// Dense matrix of P_t. Throws std::invalid_argument for t < 0.
  Eigen::MatrixXd at(double t) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd modes_;      // M^{-1/2} Q
  Eigen::MatrixXd modes_inv_;  // Q^T M^{1/2}
};

Eigen::MatrixXd heat_kernel(const WeightedGraph& g, double t);

}  // namespace curvlab

#endif
