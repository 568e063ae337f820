#ifndef CURVLAB_RNG_HPP
#define CURVLAB_RNG_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace curvlab {

/// Seeded generator with an explicit Box-Muller normal sampler, so sampled
/// sequences do not depend on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return std::ldexp(static_cast<double>(gen_() >> 11), -53); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  Eigen::VectorXd gaussian(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = normal();
    return v;
  }

  Eigen::VectorXcd complex_gaussian(int n) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = std::complex<double>(normal(), normal());
    return v;
  }

  Eigen::VectorXd unit_vector(int n) {
    Eigen::VectorXd v = gaussian(n);
    while (v.norm() < 1e-12) v = gaussian(n);
    return v / v.norm();
  }

  Eigen::VectorXcd complex_unit_vector(int n) {
    Eigen::VectorXcd v = complex_gaussian(n);
    while (v.norm() < 1e-12) v = complex_gaussian(n);
    return v / v.norm();
  }

  Eigen::MatrixXcd complex_matrix(int n) {
    Eigen::MatrixXcd a(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) a(i, j) = std::complex<double>(normal(), normal());
    return a;
  }

  /// Gaussian Hermitian matrix.
  Eigen::MatrixXcd hermitian(int n) {
    Eigen::MatrixXcd a = complex_matrix(n);
    return 0.5 * (a + a.adjoint());
  }

  /// Positive definite matrix with unit normalized trace.
  Eigen::MatrixXcd density(int n, double floor = 1e-3) {
    Eigen::MatrixXcd a = complex_matrix(n);
    Eigen::MatrixXcd p = a * a.adjoint() + floor * Eigen::MatrixXcd::Identity(n, n);
    const double tau = p.trace().real() / n;
    return p / tau;
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace curvlab

#endif
