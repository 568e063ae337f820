#ifndef CURVLAB_QMS_HPP
#define CURVLAB_QMS_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvlab/means.hpp"

namespace curvlab {

using Matx = Eigen::MatrixXcd;

/// Normalized trace tau(A) = tr(A)/n.
std::complex<double> tau(const Matx& a);

/// Throws unless a is Hermitian with tau(a) = 1 (and positive definite when
/// require_pd is set).
void validate_density(const Matx& a, bool require_pd);

/// One jump family {(V_j, omega_j)} with its star pairing V_j^* = V_{star[j]}.
struct JumpFamily {
  std::vector<Matx> ops;
  std::vector<double> omegas;
  std::vector<int> star;
};

/// Conditional expectation onto a block-diagonal subalgebra (a pinching by a
/// resolution of the identity into orthogonal projections) or onto the
/// scalars (E = tau(.) 1).
class ConditionalExpectation {
 public:
  enum class Kind { Trace, Pinching };

  static ConditionalExpectation trace(int n);
  /// Pinching given a partition of the basis indices {0,...,n-1} into blocks.
  static ConditionalExpectation blocks(int n, const std::vector<std::vector<int>>& blocks);
  /// Pinching given explicit pairwise-orthogonal projections summing to 1.
  static ConditionalExpectation projections(const std::vector<Matx>& ps);

  Kind kind() const { return kind_; }
  int dim() const { return n_; }
  const std::vector<Matx>& projection_list() const { return projections_; }

  Matx apply(const Matx& a) const;
  /// Superoperator of E in the matrix-unit basis (column-major vec).
  Matx superoperator() const;

 private:
  ConditionalExpectation() = default;
  Kind kind_ = Kind::Trace;
  int n_ = 0;
  std::vector<Matx> projections_;
};

/// Generator of a GNS-symmetric quantum Markov semigroup on M_n in jump
/// form, L(A) = sum_j e^{-omega_j/2} (V_j^* [V_j, A] - [V_j^*, A] V_j),
/// grouped into jump families (a single family for directly built
/// generators, one family per summand for commuting sums). The conditions on
/// a family are: tau(V_j^* V_k) = 0 for j != k, tau(V_j) = 0, star closure
/// and sigma V_j sigma^{-1} = e^{-omega_j} V_j.
class QmsGenerator {
 public:
  /// Single-family generator. With orthogonalize set, families violating the
  /// orthogonality condition are rotated by a unitary mixing of equal-omega
  /// jumps (which leaves the generator unchanged); otherwise a violation is
  /// an error. Throws std::invalid_argument naming the failed condition.
  static QmsGenerator build(const std::vector<Matx>& jumps,
                            const std::vector<double>& omegas, const Matx& sigma,
                            bool orthogonalize = false);

  /// L(A) = A - tau(A) 1, tracially symmetric, with a scaled Hermitian
  /// traceless jump basis. Requires n >= 2.
  static QmsGenerator depolarizing(int n);

  /// L(A) = A - E(A) for a sigma-compatible conditional expectation
  /// (tau(E(A) sigma) = tau(A sigma) is verified). Throws on incompatible
  /// sigma.
  static QmsGenerator dephasing(const ConditionalExpectation& expectation,
                                const Matx& sigma);

  /// Sum of family generators with mutually commuting jump operators; the
  /// cross-family commutators and the per-family conditions are verified,
  /// and [L_k, L_l] = 0 is checked on the assembled superoperators.
  static QmsGenerator commuting_sum(const std::vector<JumpFamily>& families,
                                    const Matx& sigma);

  int dim() const { return n_; }
  const Matx& sigma() const { return sigma_; }
  bool tracially_symmetric() const;

  int family_count() const { return static_cast<int>(families_.size()); }
  const JumpFamily& family(int k) const { return families_[k]; }

  // Flattened jump access (families concatenated).
  int jump_count() const { return static_cast<int>(jump_index_.size()); }
  const Matx& jump(int j) const;
  double omega(int j) const;
  int star(int j) const;

  /// n^2 x n^2 superoperator of L in the matrix-unit basis.
  const Matx& superoperator() const { return superop_; }
  /// tau-dual L^dagger with tau(L(A) B) = tau(A L^dagger(B)).
  Matx dual_superoperator() const;
  /// Superoperator of the family summand L_k.
  Matx family_superoperator(int k) const;

  Matx apply(const Matx& a) const;
  Matx gamma(const Matx& a, const Matx& b) const;
  Matx gamma(const Matx& a) const { return gamma(a, a); }
  Matx gamma2(const Matx& a, const Matx& b) const;
  Matx gamma2(const Matx& a) const { return gamma2(a, a); }

  /// P_t = exp(-tL) via the spectral decomposition in the GNS inner product.
  /// Throws for t < 0.
  Matx semigroup(double t) const;
  Matx semigroup_apply(double t, const Matx& a) const;
  /// State evolution P_t^dagger(rho).
  Matx dual_semigroup_apply(double t, const Matx& rho) const;

  /// sigma^z via the cached eigendecomposition of sigma.
  Matx sigma_power(std::complex<double> z) const;

 private:
  QmsGenerator() = default;
  void finalize();  // caches superoperator and spectral data

  int n_ = 0;
  Matx sigma_;
  std::vector<JumpFamily> families_;
  std::vector<std::pair<int, int>> jump_index_;  // (family, member)

  Matx superop_;
  Eigen::VectorXd sigma_eigs_;
  Matx sigma_vecs_;
  Eigen::VectorXd semigroup_eigs_;
  Matx semigroup_modes_, semigroup_modes_inv_;
};

/// Choi matrix of a superoperator (block (i,j) holds Phi(E_ij)); the map is
/// completely positive iff this matrix is PSD.
Matx choi_matrix(const Matx& superop);

/// First-order differential calculus in jump coordinates: F = M_n^d with
/// (partial A)_j = e^{-omega_j/4} [V_j, A], pairing (xi|eta) = sum_j
/// xi_j^* eta_j, (J xi)_j = sigma^{1/2} xi_{j*}^* sigma^{-1/2} and modular
/// group (V_t xi)_j = e^{i omega_j t} sigma^{it} xi_j sigma^{-it}.
class Fodc {
 public:
  explicit Fodc(const QmsGenerator& gen);

  const QmsGenerator& generator() const { return gen_; }
  int matrix_dim() const { return gen_.dim(); }
  int jump_count() const { return gen_.jump_count(); }
  int dim() const { return gen_.jump_count() * gen_.dim() * gen_.dim(); }

  std::vector<Matx> partial(const Matx& a) const;
  Matx pairing(const std::vector<Matx>& xi, const std::vector<Matx>& eta) const;
  std::vector<Matx> jmap(const std::vector<Matx>& xi) const;
  std::vector<Matx> modular(double t, const std::vector<Matx>& xi) const;

  Eigen::VectorXcd flatten(const std::vector<Matx>& xi) const;
  std::vector<Matx> unflatten(const Eigen::VectorXcd& v) const;

  /// dim x n^2 matrix of the derivation.
  Matx partial_matrix() const;
  /// Metric of <xi,eta>_sigma = tau((xi|eta) sigma) on flattened vectors.
  Matx gns_metric() const;

 private:
  QmsGenerator gen_;
};

/// ||xi||^2 with the mean-function multiplier: in the eigenbasis of rho (with
/// eigenvalues lambda_p), component (p,q) of xi_j is weighted by
/// Lambda(e^{omega_j/2} lambda_p, e^{-omega_j/2} lambda_q). Throws when rho
/// is not positive definite.
double lambda_norm(const Fodc& fodc, const MeanFunction& mean, const Matx& rho,
                   const std::vector<Matx>& xi);

/// The sesquilinear form polarizing lambda_norm.
std::complex<double> lambda_inner(const Fodc& fodc, const MeanFunction& mean,
                                  const Matx& rho, const std::vector<Matx>& xi,
                                  const std::vector<Matx>& eta);

struct PimsnerPopaConfig {
  int samples = 512;
  int steps = 100;
  std::uint64_t seed = 1;
};

/// Largest C with C A <= E(A) for all positive A, via the rank-one reduction
/// C(E) = inf over unit v of 1/(v^* E(vv^*)^+ v) (0 when v leaves the range).
/// Exact value 1/n for E = tau(.) 1; sampled infimum plus descent otherwise.
double pimsner_popa(const ConditionalExpectation& expectation,
                    const PimsnerPopaConfig& cfg = {});

}  // namespace curvlab

#endif
