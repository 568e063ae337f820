#ifndef CURVLAB_GRAPH_CURVATURE_HPP
#define CURVLAB_GRAPH_CURVATURE_HPP

#include <Eigen/Dense>

#include "curvlab/graph.hpp"
#include "curvlab/report.hpp"

namespace curvlab {

/// Gamma on edge fields: vec_gamma(xi,eta)(x) = (1/2m(x)) sum_y b(x,y)
/// conj(xi(x,y)) eta(x,y). Restricted to gradients it recovers the carre du
/// champ.
VertexFunction vec_gamma(const WeightedGraph& g, const EdgeField& xi,
                         const EdgeField& eta);
VertexFunction vec_gamma(const WeightedGraph& g, const EdgeField& xi);

/// Antilinear involution J xi(x,y) = -conj(xi(y,x)); J(df) = d(conj f).
EdgeField jmap(const WeightedGraph& g, const EdgeField& xi);

/// Linear operator on edge fields claiming the two intertwining identities
/// L_vec d = d L and L_vec J = J L_vec. `certified` records whether both
/// residuals passed the 1e-10 check; curvature routines reject uncertified
/// operators.
struct HodgeOperator {
  enum class Kind { Idle, Splitting, Custom };
  Kind kind = Kind::Custom;
  double splitting_level = 0.0;  // K used by the splitting construction
  Eigen::MatrixXcd matrix;       // directed-edge indexed
  bool certified = false;
  double intertwine_residual = 0.0;
  double jcommute_residual = 0.0;

  bool real() const;
};

/// Canonical edge-space operator built from the 1-skeleton:
/// (L_vec xi)(x,y) = -sum_z [ b(y,z)/m(y) xi(y,z) + b(x,z)/m(x) xi(z,x) ].
/// Certification failure signals an implementation bug and throws.
HodgeOperator idle_hodge(const WeightedGraph& g);

/// Acts as d L d^+ on ran(d) and as the scalar 2K on its b/2-orthogonal
/// complement.
HodgeOperator splitting_hodge(const WeightedGraph& g, double K);

/// Wraps a user-supplied dense edge-space matrix; certification is attempted
/// and the residuals are recorded.
HodgeOperator custom_hodge(const WeightedGraph& g, const Eigen::MatrixXcd& matrix);

/// Optimal K with Gamma2(f)(x) >= K Gamma(f)(x) for all f, per vertex; the
/// bound is the minimum over vertices. Vertices with Gamma identically zero
/// get +inf and are excluded.
CurvatureReport bakry_emery_curvature(const WeightedGraph& g, double truncation = 1e-11);

/// Optimal K in the pointwise inequality
///   (vec_gamma(L_vec xi, xi) + vec_gamma(xi, L_vec xi) - L vec_gamma(xi))/2
///     >= K vec_gamma(xi)
/// for the given certified operator. Runs over real fields when the matrix
/// is real (complex fields decouple into real and imaginary parts then),
/// otherwise over complex fields. Throws on uncertified operators.
CurvatureReport intertwining_curvature(const WeightedGraph& g, const HodgeOperator& hodge,
                                       double truncation = 1e-11);

/// Force the complex-field pencil regardless of the matrix being real; used
/// as a cross-check of the real-field reduction.
CurvatureReport intertwining_curvature_complex(const WeightedGraph& g,
                                               const HodgeOperator& hodge,
                                               double truncation = 1e-11);

/// -3/2 - 1/P_min for graphs with deg(x) <= 1 everywhere. Throws (naming a
/// vertex) when the degree condition fails, and when the graph has no edges.
double universal_bound(const WeightedGraph& g);

}  // namespace curvlab

#endif
