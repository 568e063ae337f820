#ifndef CURVLAB_QMS_CURVATURE_HPP
#define CURVLAB_QMS_CURVATURE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "curvlab/means.hpp"
#include "curvlab/qms.hpp"
#include "curvlab/report.hpp"

namespace curvlab {

/// Operator on the tangent bimodule claiming the three intertwining
/// identities L_vec d = d L, L_vec J = J L_vec and L_vec V_t = V_t L_vec
/// (the last checked at sampled t). Curvature routines reject uncertified
/// operators.
struct QmsHodge {
  enum class Construction { Splitting, Product, Custom };
  Construction construction = Construction::Custom;
  double level = 0.0;  // K of the splitting construction
  Matx matrix;         // on flattened fields, dim = jump_count * n^2
  bool certified = false;
  double intertwine_residual = 0.0;
  double jcommute_residual = 0.0;
  double modular_residual = 0.0;
};

/// d L(A) + 2K eta on the decomposition xi = d(A) + eta orthogonal in the
/// sigma-weighted inner product tau((.|.) sigma).
QmsHodge splitting_hodge_qms(const Fodc& fodc, double K);

/// Block operator for a commuting-sum generator: on the k-th family block
/// the family's splitting operator plus the other family generators acting
/// componentwise. per_family_K must be empty (each family then uses the
/// minimum of the per-family Bakry-Emery bounds) or give one common level.
QmsHodge product_hodge(const QmsGenerator& gen,
                       const std::vector<double>& per_family_K = {});

QmsHodge custom_qms_hodge(const Fodc& fodc, const Matx& matrix);

struct QmsCurvatureConfig {
  int samples = 128;
  int steps = 60;
  std::uint64_t seed = 1;
  double truncation = 1e-11;
};

/// Bakry-Emery constant via the Loewner-order reduction: for sampled unit
/// vectors v, the pencil (A -> v^* Gamma2(A) v, A -> v^* Gamma(A) v) is
/// solved over all A (headline bound) and over Hermitian A
/// (restricted_bound); the bound is the infimum over v after refinement.
CurvatureReport be_curvature_qms(const QmsGenerator& gen,
                                 const QmsCurvatureConfig& cfg = {});

/// Same reduction for the Gamma2-type form of a certified Hodge operator
/// over xi in F (headline) and over the J-fixed real subspace
/// (restricted_bound).
CurvatureReport intertwining_curvature_qms(const Fodc& fodc, const QmsHodge& hodge,
                                           const QmsCurvatureConfig& cfg = {});

/// Largest K with T(xi) >= K (xi|xi) in Loewner order at the single field
/// xi, where T is the Gamma2-type form of the Hodge operator; an upper bound
/// certificate for the optimal constant of this operator. Throws when
/// (xi|xi) = 0.
double witness_upper_bound(const Fodc& fodc, const QmsHodge& hodge,
                           const std::vector<Matx>& xi);

std::vector<double> default_time_grid();

struct QmsGeViolation {
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  Matx a;
  Matx rho;
};

/// Checks || d P_t(A) ||^2_{Lambda,rho} <= e^{-2Kt} || d A ||^2_{Lambda,
/// P_t^dagger(rho)} on the time grid for one self-adjoint A and positive
/// definite rho. Returns the first violation (lhs > rhs (1 + 1e-9) + 1e-12).
std::optional<QmsGeViolation> ge_check_qms(const QmsGenerator& gen,
                                           const MeanFunction& mean, double K,
                                           const Matx& a, const Matx& rho,
                                           const std::vector<double>& t_grid);

/// Seeded sweep of ge_check_qms over random Hermitian A and random states.
std::optional<QmsGeViolation> ge_sweep_qms(const QmsGenerator& gen,
                                           const MeanFunction& mean, double K,
                                           int samples, std::uint64_t seed,
                                           const std::vector<double>& t_grid);

/// Largest K consistent with the t = 0 derivative of the gradient estimate
/// at (A, rho); the multiplier derivative along -L^dagger(rho) is evaluated
/// with divided differences in the eigenbasis of rho. Returns nullopt when
/// ||dA||^2 < 1e-14 (no information).
std::optional<double> ge_derivative_estimate(const QmsGenerator& gen,
                                             const MeanFunction& mean, const Matx& a,
                                             const Matx& rho);

/// Seeded infimum of the derivative estimate over random (A, rho).
double ge_derivative_infimum(const QmsGenerator& gen, const MeanFunction& mean,
                             int samples, std::uint64_t seed);

struct MlsiViolation {
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  Matx rho0;
};

/// Checks D(P_t^dagger rho || sigma) <= e^{-rate t} D(rho || sigma) on the
/// grid, with D the relative entropy in normalized trace and eigenvalues
/// clipped at 1e-14. Throws for non-states.
std::optional<MlsiViolation> mlsi_decay_check(const QmsGenerator& gen, double rate,
                                              const Matx& rho0,
                                              const std::vector<double>& t_grid);

/// Seeded sweep over random states mixing pure and near-stationary profiles.
std::optional<MlsiViolation> mlsi_sweep(const QmsGenerator& gen, double rate,
                                        int samples, std::uint64_t seed,
                                        const std::vector<double>& t_grid);

}  // namespace curvlab

#endif
