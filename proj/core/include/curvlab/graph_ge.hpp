#ifndef CURVLAB_GRAPH_GE_HPP
#define CURVLAB_GRAPH_GE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "curvlab/graph.hpp"
#include "curvlab/means.hpp"
#include "curvlab/report.hpp"

namespace curvlab {

/// <df, Lambda o (rho x rho) df>_{b/2}: the Lambda-weighted gradient energy
/// of f at density rho (the quantity the gradient estimate controls).
double ge_energy(const WeightedGraph& g, const MeanFunction& mean,
                 const Eigen::VectorXd& f, const Eigen::VectorXd& rho);

/// Largest K consistent with the t=0 derivative of the gradient-estimate
/// inequality at the pair (f, rho):
///   K = [2<dLf, Lam_rho df> + <df, D_rho[-L rho] df>] / (2 <df, Lam_rho df>),
/// where Lam_rho multiplies edge (x,y) by Lambda(rho(x),rho(y)) and D_rho[eta]
/// by d1 Lambda * eta(x) + d2 Lambda * eta(y). Returns nullopt when the
/// denominator falls below 1e-14 (no information).
std::optional<double> ge_rate_estimate(const WeightedGraph& g, const MeanFunction& mean,
                                       const Eigen::VectorXd& f,
                                       const Eigen::VectorXd& rho);

/// Infimum of ge_rate_estimate over f at fixed rho > 0, solved exactly as a
/// generalized eigenvalue pencil in f. Optionally returns the minimizing f.
std::optional<double> ge_rate_bound_at(const WeightedGraph& g, const MeanFunction& mean,
                                       const Eigen::VectorXd& rho,
                                       double truncation = 1e-11,
                                       Eigen::VectorXd* argmin_f = nullptr);

struct GeSearchConfig {
  int samples = 1024;
  std::uint64_t seed = 1;
  int refine_steps = 200;
  double truncation = 1e-11;
};

/// Sampled infimum of the rate estimate over pairs (f, rho): rho is swept
/// over exp-Gaussian profiles plus vertex-concentrated profiles, the f-pencil
/// is solved exactly at each rho, and the best rho is refined by descent in
/// log rho. Every evaluated pair certifies that the optimal constant is <=
/// the reported bound. Deterministic under the seed.
CurvatureReport ge_curvature_search(const WeightedGraph& g, const MeanFunction& mean,
                                    const GeSearchConfig& cfg = {});

struct GeFalsifyConfig {
  int samples = 1024;
  std::uint64_t seed = 1;
  std::vector<double> t_grid = {0.05, 0.1, 0.25, 0.5, 1.0, 2.0, 4.0};
  double tolerance = 1e-9;
};

struct GeViolation {
  Eigen::VectorXd f;
  Eigen::VectorXd rho;
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Searches sampled (f, rho, t) for a violation of
///   <d P_t f, Lam(rho) d P_t f> <= e^{-2Kt} <df, Lam(P_t rho) df>
/// by more than the tolerance. Returns the first one found.
std::optional<GeViolation> ge_falsify(const WeightedGraph& g, const MeanFunction& mean,
                                      double K, const GeFalsifyConfig& cfg = {});

/// Entropic curvature bound of the two-point graph with weights
/// b(0,1) = lambda(1-lambda), m = (lambda, 1-lambda): minimizes
/// 1/2 + logmean(lambda(1+beta), (1-lambda)(1-beta)) / (1-beta^2) over
/// beta in (-1,1) by grid bracketing plus golden-section refinement.
double two_point_entropic_exact(double lambda);

}  // namespace curvlab

#endif
