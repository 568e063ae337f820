#ifndef CURVLAB_INSTANCES_HPP
#define CURVLAB_INSTANCES_HPP

#include <Eigen/Dense>
#include <vector>

#include "curvlab/graph.hpp"
#include "curvlab/mapping.hpp"

namespace curvlab {

/// b = m (x) m for a given probability vector m (sum 1); the generator of the
/// weighted complete-graph walk with Lf = f - <1,f>_m.
WeightedGraph make_complete_graph(const Eigen::VectorXd& m);
WeightedGraph make_uniform_complete_graph(int n);

/// X = {0,1}, b(0,1) = lambda(1-lambda), m = (lambda, 1-lambda).
WeightedGraph make_two_point(double lambda);

/// Path on three vertices with m = 4 and unit edge weights (P_min = 1/4).
WeightedGraph make_path3();

/// The three-vertex family b(1,2)=10, b(2,3)=1, m = (1/eps, 1, 1/20).
WeightedGraph make_three_vertex(double eps);

/// Hypercube {0,1}^d with uniform measure, all bit-flip transitions at rate
/// kappa; also returns the bit-flip mapping representation.
MappingRep make_hypercube(int d, double kappa);

/// Cycle Z_k with shifts +-1 at rate kappa and uniform measure.
MappingRep make_cycle(int k, double kappa);

/// Two-point graph presented by two copies of the swap map with rates c1, c2
/// (a representation whose isometry V is not surjective).
MappingRep make_two_point_duplicate_swap(double c1, double c2);

}  // namespace curvlab

#endif
