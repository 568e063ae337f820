#ifndef CURVLAB_MAPPING_HPP
#define CURVLAB_MAPPING_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "curvlab/graph.hpp"
#include "curvlab/report.hpp"

namespace curvlab {

/// Raw data of a mapping representation: maps[k][x] is the image of vertex x
/// under the k-th map, rates(x,k) the rate c(x,delta_k) and inverse[k] the
/// index of the inverse map. Rates equal to zero encode inapplicability.
struct MappingRepSpec {
  std::vector<std::vector<int>> maps;
  Eigen::MatrixXd rates;
  std::vector<int> inverse;
};

/// Presentation of the graph Laplacian as L f(x) = sum_k c(x,k)(f(x)-f(k x))
/// with detailed balance. The tangent space l2(X x G, w/2), w = c m, is
/// indexed by the active cells (x,k) with c(x,k) > 0.
class MappingRep {
 public:
  /// Validates (a) agreement with the graph Laplacian, (b) the inverse-map
  /// property on active cells and (c) detailed balance on random test
  /// functions, plus consistency of the induced edge weights with the graph.
  /// Throws std::invalid_argument naming the violated property.
  static MappingRep build(const WeightedGraph& g, const MappingRepSpec& spec);

  const WeightedGraph& graph() const { return graph_; }
  int map_count() const { return static_cast<int>(maps_.size()); }
  int apply_map(int k, int x) const { return maps_[k][x]; }
  double rate(int x, int k) const { return rates_(x, k); }
  int inverse(int k) const { return inverse_[k]; }

  /// Active cells (x, k) with c(x,k) > 0, in row-major (x, k) order.
  int cell_count() const { return static_cast<int>(cells_.size()); }
  const std::vector<std::pair<int, int>>& cells() const { return cells_; }
  int cell_index(int x, int k) const;  // -1 when inactive
  /// w(x,k)/2 = c(x,k) m(x) / 2 per active cell.
  const Eigen::VectorXd& cell_half_weight() const { return half_weight_; }

  /// nabla f(x,k) = f(x) - f(k x) as a cells x vertices matrix.
  const Eigen::MatrixXd& nabla_matrix() const { return nabla_; }

 private:
  explicit MappingRep(WeightedGraph g) : graph_(std::move(g)) {}
  WeightedGraph graph_;
  std::vector<std::vector<int>> maps_;
  Eigen::MatrixXd rates_;
  std::vector<int> inverse_;
  std::vector<std::pair<int, int>> cells_;
  Eigen::MatrixXi cell_lookup_;
  Eigen::VectorXd half_weight_;
  Eigen::MatrixXd nabla_;
};

struct MappingConditions {
  bool commuting = false;        // (a) all maps commute
  bool invariant_rates = false;  // (b) c(delta x, gamma) = c(x, gamma)
  bool involutive = false;       // (c) delta o delta = id
};

MappingConditions check_conditions(const MappingRep& mr);

/// The isometry V: l2(X x X, b/2) -> l2(X x G, w/2) as a cells x edges
/// matrix: (V xi)(x,k) = xi(x, k x).
Eigen::MatrixXd isometry_matrix(const MappingRep& mr);

/// J on cells: (J xi)(x,k) = -conj(xi(k x, k^{-1})).
Eigen::VectorXcd mapping_jmap(const MappingRep& mr, const Eigen::VectorXcd& xi);

struct MappingHodge {
  enum class Variant { Commuting, Involutive };
  Variant variant = Variant::Commuting;
  double level = 0.0;  // K of the involutive construction
  Eigen::MatrixXd matrix;
  bool certified = false;
  double intertwine_residual = 0.0;
  double jcommute_residual = 0.0;
};

/// Commuting variant ((a),(b) required):
///   (L_vec xi)(x,k) = sum_g c(x,g) (xi(x,k) - xi(g x, k)).
/// Involutive variant ((a),(b),(c) required) adds 2K zeta with
///   zeta(x,k) = (xi(x,k) + xi(k x, k))/2; K defaults to
///   2 min{c(x,k) : c(x,k) > 0}. Throws naming any missing condition.
MappingHodge mapping_hodge(const MappingRep& mr, MappingHodge::Variant variant,
                           std::optional<double> K = std::nullopt);

/// Per-vertex pencil of the Gamma2-type inequality over l2(X x G, w/2).
CurvatureReport intertwining_curvature_mapping(const MappingRep& mr,
                                               const MappingHodge& hodge,
                                               double truncation = 1e-11);

/// Curvature of an arbitrary cell-space operator (used for the pullback /
/// pushforward cross-checks); certification residuals are recomputed.
CurvatureReport intertwining_curvature_mapping_matrix(const MappingRep& mr,
                                                      const Eigen::MatrixXd& matrix,
                                                      double truncation = 1e-11);

}  // namespace curvlab

#endif
