#include "curvlab/means.hpp"

#include <cmath>
#include <stdexcept>

namespace curvlab {

namespace {

// Logarithmic mean (s-t)/(log s - log t), extended by s on the diagonal and
// by 0 on the boundary. Near the diagonal the quotient cancels, so we switch
// to the series in u = (s-t)/(s+t):  Λ = a(1 - u²/3 - 4u⁴/45),  a = (s+t)/2.
double log_mean(double s, double t) {
  if (s <= 0.0 || t <= 0.0) return 0.0;
  const double a = 0.5 * (s + t);
  const double u = (s - t) / (s + t);
  if (std::abs(u) < 1e-4) return a * (1.0 - u * u / 3.0 - 4.0 * u * u * u * u / 45.0);
  return (s - t) / (std::log(s) - std::log(t));
}

std::array<double, 2> log_mean_partials(double s, double t) {
  const double u = (s - t) / (s + t);
  if (std::abs(u) < 1e-5) {
    // ∂₁Λ = ½ - u/3 + u²/6 + O(u³), ∂₂ by u -> -u.
    return {0.5 - u / 3.0 + u * u / 6.0, 0.5 + u / 3.0 + u * u / 6.0};
  }
  const double ell = std::log(s) - std::log(t);
  const double d1 = (ell - 1.0 + t / s) / (ell * ell);
  const double d2 = (-ell + s / t - 1.0) / (ell * ell);
  return {d1, d2};
}

}  // namespace

const std::vector<std::string>& builtin_mean_names() {
  static const std::vector<std::string> names = {
      "left_trivial", "right_trivial", "arithmetic",
      "geometric",    "harmonic",      "logarithmic"};
  return names;
}

MeanFunction builtin_mean(const std::string& name) {
  MeanFunction m;
  m.name = name;
  if (name == "left_trivial") {
    m.eval = [](double s, double) { return s; };
    m.partials = [](double, double) { return std::array<double, 2>{1.0, 0.0}; };
    m.symmetric = false;
  } else if (name == "right_trivial") {
    m.eval = [](double, double t) { return t; };
    m.partials = [](double, double) { return std::array<double, 2>{0.0, 1.0}; };
    m.symmetric = false;
  } else if (name == "arithmetic") {
    m.eval = [](double s, double t) { return 0.5 * (s + t); };
    m.partials = [](double, double) { return std::array<double, 2>{0.5, 0.5}; };
    m.symmetric = true;
  } else if (name == "geometric") {
    m.eval = [](double s, double t) {
      if (s <= 0.0 || t <= 0.0) return 0.0;
      return std::sqrt(s * t);
    };
    m.partials = [](double s, double t) {
      return std::array<double, 2>{0.5 * std::sqrt(t / s), 0.5 * std::sqrt(s / t)};
    };
    m.symmetric = true;
  } else if (name == "harmonic") {
    m.eval = [](double s, double t) {
      if (s + t <= 0.0) return 0.0;
      return 2.0 * s * t / (s + t);
    };
    m.partials = [](double s, double t) {
      const double d = (s + t) * (s + t);
      return std::array<double, 2>{2.0 * t * t / d, 2.0 * s * s / d};
    };
    m.symmetric = true;
  } else if (name == "logarithmic") {
    m.eval = [](double s, double t) {
      if (s == t) return s;
      return log_mean(s, t);
    };
    m.partials = [](double s, double t) { return log_mean_partials(s, t); };
    m.symmetric = true;
  } else {
    throw std::invalid_argument("unknown mean function '" + name + "'");
  }
  return m;
}

std::array<double, 2> mean_partials(const MeanFunction& mean, double s, double t) {
  if (s <= 0.0 || t <= 0.0)
    throw std::invalid_argument("mean_partials requires s, t > 0");
  return mean.partials(s, t);
}

double divided_difference(const MeanFunction& mean, int slot, double a, double a2,
                          double fixed) {
  if (slot != 1 && slot != 2)
    throw std::invalid_argument("divided_difference slot must be 1 or 2");
  if (a <= 0.0 || a2 <= 0.0 || fixed <= 0.0)
    throw std::invalid_argument("divided_difference requires positive arguments");
  if (std::abs(a - a2) < 1e-9) {
    const double mid = 0.5 * (a + a2);
    const auto d = slot == 1 ? mean.partials(mid, fixed) : mean.partials(fixed, mid);
    return slot == 1 ? d[0] : d[1];
  }
  const double num = slot == 1 ? mean.eval(a, fixed) - mean.eval(a2, fixed)
                               : mean.eval(fixed, a) - mean.eval(fixed, a2);
  return num / (a - a2);
}

}  // namespace curvlab
