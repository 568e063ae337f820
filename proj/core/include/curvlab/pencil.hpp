#ifndef CURVLAB_PENCIL_HPP
#define CURVLAB_PENCIL_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>

namespace curvlab {

/// Largest K with left >= K * right in the PSD order, equivalently the
/// infimum of the Rayleigh quotient over vectors of positive right-energy.
/// The right form is eigendecomposed and eigenvalues below truncation * max
/// are dropped; the left form is reduced by the Schur complement over the
/// dropped kernel block (which couples to the range in general), whitened on
/// the kept range, and an ordinary symmetric eigenproblem is solved.
/// Returns nullopt when the kept range is trivial (empty_range), and -inf
/// with a violating witness when the left form fails to dominate on the
/// kernel (no finite K exists). The witness satisfies
/// witness^H * right * witness = 1 and attains the reported value.
///
/// Throws std::invalid_argument if left is not Hermitian (tolerance 1e-12
/// relative) or right is not PSD to -1e-12 relative.
struct PencilSolution {
  double value;
  Eigen::VectorXd witness;
};
struct PencilSolutionC {
  double value;
  Eigen::VectorXcd witness;
};

/// SchurComplement solves the PSD-order problem over the whole space (the
/// dropped block is eliminated exactly); Drop restricts the variation to the
/// kept range of the right form, treating near-kernel directions as carrying
/// no information (used where tiny right-energies are excluded by contract,
/// as in the gradient-estimate denominators).
enum class KernelPolicy { SchurComplement, Drop };

std::optional<PencilSolution> pencil_min_eig(const Eigen::MatrixXd& left,
                                             const Eigen::MatrixXd& right,
                                             double truncation = 1e-11,
                                             KernelPolicy policy = KernelPolicy::SchurComplement);

std::optional<PencilSolutionC> pencil_min_eig(const Eigen::MatrixXcd& left,
                                              const Eigen::MatrixXcd& right,
                                              double truncation = 1e-11,
                                              KernelPolicy policy = KernelPolicy::SchurComplement);

/// Seeded minimization of an objective over the unit sphere in R^dim:
/// `samples` random starts followed by projected gradient descent (central
/// difference gradient, step halving) from the best one. The result never
/// exceeds any evaluated objective value and is deterministic under the seed.
struct SphereSearchConfig {
  int samples = 512;
  int steps = 200;
  std::uint64_t seed = 1;
};

struct SphereSearchResult {
  double value;
  Eigen::VectorXd argmin;
  long evaluations = 0;
};

SphereSearchResult sphere_search(const std::function<double(const Eigen::VectorXd&)>& objective,
                                 int dim, const SphereSearchConfig& cfg = {});

}  // namespace curvlab

#endif
