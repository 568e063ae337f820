#include <cmath>
#include <stdexcept>
#include <vector>

#include "curvlab/means.hpp"
#include "doctest.h"

using curvlab::builtin_mean;
using curvlab::divided_difference;
using curvlab::mean_partials;

namespace {

const std::vector<double> kGrid = {1e-3, 0.08, 0.4, 1.0, 1.7, 3.0, 12.5, 80.0};

}  // namespace

TEST_CASE("builtin means: pointwise values") {
  const auto logm = builtin_mean("logarithmic");
  CHECK(logm.eval(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  const double e = std::exp(1.0);
  CHECK(logm.eval(e, 1.0) == doctest::Approx(e - 1.0).epsilon(1e-14));
  CHECK(logm.eval(0.0, 2.0) == 0.0);
  CHECK(logm.eval(2.0, 0.0) == 0.0);

  const auto lt = builtin_mean("left_trivial");
  for (double s : kGrid)
    for (double t : kGrid) CHECK(lt.eval(s, t) == s);

  CHECK(builtin_mean("arithmetic").eval(3.0, 0.0) == doctest::Approx(1.5));
  CHECK(builtin_mean("geometric").eval(3.0, 0.0) == 0.0);
  CHECK(builtin_mean("harmonic").eval(3.0, 0.0) == 0.0);
  CHECK_THROWS_AS(builtin_mean("median"), std::invalid_argument);
}

TEST_CASE("builtin means: mean property and homogeneity") {
  for (const auto& name : curvlab::builtin_mean_names()) {
    const auto mean = builtin_mean(name);
    for (double s : kGrid) {
      CHECK(mean.eval(s, s) == doctest::Approx(s).epsilon(1e-13));
      for (double t : kGrid) {
        for (double c : {0.25, 3.0}) {
          CHECK(mean.eval(c * s, c * t) ==
                doctest::Approx(c * mean.eval(s, t)).epsilon(1e-12));
        }
        CHECK(mean.eval(s, t) <= std::max(s, t) + 1e-12);
      }
    }
  }
}

TEST_CASE("builtin means: symmetric flag is truthful") {
  for (const auto& name : curvlab::builtin_mean_names()) {
    const auto mean = builtin_mean(name);
    bool symmetric = true;
    for (double s : kGrid)
      for (double t : kGrid)
        if (std::abs(mean.eval(s, t) - mean.eval(t, s)) > 1e-12 * (1.0 + s + t))
          symmetric = false;
    CHECK(symmetric == mean.symmetric);
  }
}

TEST_CASE("builtin means: harmonic <= symmetric mean <= arithmetic") {
  const auto harm = builtin_mean("harmonic");
  const auto arith = builtin_mean("arithmetic");
  for (const auto& name : {"geometric", "logarithmic", "harmonic", "arithmetic"}) {
    const auto mean = builtin_mean(name);
    for (double s : kGrid) {
      for (double t : kGrid) {
        CHECK(mean.eval(s, t) >= harm.eval(s, t) - 1e-12 * (1.0 + s + t));
        CHECK(mean.eval(s, t) <= arith.eval(s, t) + 1e-12 * (1.0 + s + t));
      }
    }
  }
}

TEST_CASE("builtin means: joint concavity on sampled pairs") {
  for (const auto& name : curvlab::builtin_mean_names()) {
    const auto mean = builtin_mean(name);
    for (double s1 : kGrid) {
      for (double t1 : kGrid) {
        for (double s2 : {0.3, 2.0, 9.0}) {
          for (double t2 : {0.7, 5.0}) {
            const double mixed = mean.eval(0.5 * (s1 + s2), 0.5 * (t1 + t2));
            const double avg = 0.5 * (mean.eval(s1, t1) + mean.eval(s2, t2));
            CHECK(mixed >= avg - 1e-10 * (1.0 + mixed));
          }
        }
      }
    }
  }
}

TEST_CASE("builtin means: h(t) = mean(1,t) is nondecreasing") {
  for (const auto& name : curvlab::builtin_mean_names()) {
    const auto mean = builtin_mean(name);
    double prev = mean.eval(1.0, 1e-4);
    for (double t = 1e-3; t < 50.0; t *= 1.7) {
      const double cur = mean.eval(1.0, t);
      CHECK(cur >= prev - 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("mean_partials agrees with central differences") {
  const double h = 1e-6;
  for (const auto& name : curvlab::builtin_mean_names()) {
    const auto mean = builtin_mean(name);
    for (double s : {0.05, 0.5, 1.0, 2.0, 7.0}) {
      for (double t : {0.11, 1.0, 2.0, 2.0000001, 6.0}) {
        const auto d = mean_partials(mean, s, t);
        const double fd1 = (mean.eval(s + h, t) - mean.eval(s - h, t)) / (2 * h);
        const double fd2 = (mean.eval(s, t + h) - mean.eval(s, t - h)) / (2 * h);
        CHECK(d[0] == doctest::Approx(fd1).epsilon(1e-6));
        CHECK(d[1] == doctest::Approx(fd2).epsilon(1e-6));
      }
    }
  }
  CHECK(mean_partials(builtin_mean("arithmetic"), 2.0, 9.0)[0] == 0.5);
  CHECK(mean_partials(builtin_mean("left_trivial"), 2.0, 9.0)[0] == 1.0);
  CHECK(mean_partials(builtin_mean("left_trivial"), 2.0, 9.0)[1] == 0.0);
  CHECK_THROWS_AS(mean_partials(builtin_mean("logarithmic"), -1.0, 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(mean_partials(builtin_mean("logarithmic"), 1.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("divided differences") {
  const auto arith = builtin_mean("arithmetic");
  CHECK(divided_difference(arith, 1, 0.3, 5.0, 2.0) == doctest::Approx(0.5));
  CHECK(divided_difference(arith, 2, 0.3, 5.0, 2.0) == doctest::Approx(0.5));

  // Equal arguments fall back to the partial derivative.
  const auto logm = builtin_mean("logarithmic");
  CHECK(divided_difference(logm, 1, 2.0, 2.0, 3.0) ==
        doctest::Approx(mean_partials(logm, 2.0, 3.0)[0]).epsilon(1e-12));

  // Direct quotient, evaluated independently: (L(3,2) - L(1,2)) / 2 with
  // L(3,2) = 1/log(3/2) and L(1,2) = 1/log(2).
  const double expected = (1.0 / std::log(1.5) - 1.0 / std::log(2.0)) / 2.0;
  CHECK(divided_difference(logm, 1, 3.0, 1.0, 2.0) ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("logarithmic mean near the diagonal is smooth") {
  const auto logm = builtin_mean("logarithmic");
  // Series and quotient branches must agree where they meet.
  for (double delta : {1e-3, 2e-4, 1e-4, 5e-5, 1e-6, 1e-9}) {
    const double direct = delta / std::log1p(delta);
    CHECK(logm.eval(1.0 + delta, 1.0) == doctest::Approx(direct).epsilon(1e-11));
  }
}
