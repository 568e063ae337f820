#ifndef CURVLAB_MEANS_HPP
#define CURVLAB_MEANS_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace curvlab {

/// A two-variable mean Λ(s,t) on [0,∞)² together with its first partial
/// derivatives on (0,∞)². Built-in means carry exact boundary extensions at
/// s=0 or t=0 so no limit is ever taken at runtime. User-defined means are
/// accepted as-is; no attempt is made to verify operator monotonicity.
struct MeanFunction {
  std::string name;
  std::function<double(double, double)> eval;
  std::function<std::array<double, 2>(double, double)> partials;
  bool symmetric = false;
};

/// Names accepted by builtin_mean (and the CLI --mean flag).
const std::vector<std::string>& builtin_mean_names();

/// left_trivial, right_trivial, arithmetic, geometric, harmonic, logarithmic.
/// Throws std::invalid_argument for unknown names.
MeanFunction builtin_mean(const std::string& name);

/// (∂₁Λ, ∂₂Λ) at (s,t), s,t > 0. Throws std::invalid_argument otherwise.
std::array<double, 2> mean_partials(const MeanFunction& mean, double s, double t);

/// First divided difference in the given slot (1 or 2) with the other
/// argument fixed: slot 1 returns (Λ(a,fixed)-Λ(a2,fixed))/(a-a2).
/// Falls back to the analytic partial derivative when |a-a2| < 1e-9.
double divided_difference(const MeanFunction& mean, int slot, double a, double a2,
                          double fixed);

}  // namespace curvlab

#endif
