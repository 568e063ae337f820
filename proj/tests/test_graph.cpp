#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "curvlab/graph.hpp"
#include "curvlab/instances.hpp"
#include "curvlab/rng.hpp"
#include "doctest.h"

using namespace curvlab;
using Cd = std::complex<double>;

namespace {

WeightedGraph triangle() {
  GraphSpec spec;
  spec.vertices = {"a", "b", "c"};
  spec.m = {{"a", 1.0}, {"b", 2.0}, {"c", 0.5}};
  spec.edges = {{"a", "b", 1.0}, {"b", "c", 2.0}, {"a", "c", 0.7}};
  return WeightedGraph::build(spec);
}

VertexFunction random_function(Rng& rng, int n) {
  VertexFunction f(n);
  for (int i = 0; i < n; ++i) f(i) = Cd(rng.normal(), rng.normal());
  return f;
}

}  // namespace

TEST_CASE("build_graph: validation") {
  GraphSpec spec;
  spec.vertices = {"x", "x"};
  spec.m = {{"x", 1.0}};
  CHECK_THROWS_WITH_AS(WeightedGraph::build(spec), "duplicate vertex 'x'",
                       std::invalid_argument);

  spec.vertices = {"x", "y"};
  spec.m = {{"x", 0.0}, {"y", 1.0}};
  CHECK_THROWS_AS(WeightedGraph::build(spec), std::invalid_argument);

  spec.m = {{"x", 1.0}, {"y", 1.0}};
  spec.edges = {{"x", "x", 1.0}};
  CHECK_THROWS_AS(WeightedGraph::build(spec), std::invalid_argument);

  spec.edges = {{"x", "z", 1.0}};
  CHECK_THROWS_AS(WeightedGraph::build(spec), std::invalid_argument);

  spec.edges = {{"x", "y", -2.0}};
  CHECK_THROWS_AS(WeightedGraph::build(spec), std::invalid_argument);

  spec.edges = {{"x", "y", 1.0}, {"y", "x", 1.0}};
  CHECK_THROWS_AS(WeightedGraph::build(spec), std::invalid_argument);

  spec.edges = {{"x", "y", 1.0}};
  const WeightedGraph g = WeightedGraph::build(spec);
  CHECK(g.size() == 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.weight()(0, 1) == 1.0);
  CHECK(g.weight()(1, 0) == 1.0);
}

TEST_CASE("two-point graph matches the displayed Laplacian") {
  const double lambda = 0.37;
  const WeightedGraph g = make_two_point(lambda);
  Rng rng(1);
  const VertexFunction f = random_function(rng, 2);
  const VertexFunction lf = apply_laplacian(g, f);
  // L f(0) = (1 - lambda)(f(0) - f(1)), L f(1) = lambda (f(1) - f(0)).
  CHECK(std::abs(lf(0) - (1.0 - lambda) * (f(0) - f(1))) < 1e-14);
  CHECK(std::abs(lf(1) - lambda * (f(1) - f(0))) < 1e-14);
}

TEST_CASE("laplacian kills constants and is m-self-adjoint") {
  const WeightedGraph g = triangle();
  const VertexFunction ones = VertexFunction::Ones(3);
  CHECK(apply_laplacian(g, ones).cwiseAbs().maxCoeff() < 1e-14);

  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const VertexFunction f = random_function(rng, 3);
    const VertexFunction h = random_function(rng, 3);
    const Cd lhs = inner_m(g, f, apply_laplacian(g, h));
    const Cd rhs = inner_m(g, apply_laplacian(g, f), h);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("complete graph: Lf = f - <1,f>_m 1") {
  Rng rng(3);
  Eigen::VectorXd m(4);
  m << 0.1, 0.4, 0.3, 0.2;
  const WeightedGraph g = make_complete_graph(m);
  const VertexFunction f = random_function(rng, 4);
  const VertexFunction lf = apply_laplacian(g, f);
  const Cd mean = inner_m(g, VertexFunction::Ones(4), f);
  for (int x = 0; x < 4; ++x) CHECK(std::abs(lf(x) - (f(x) - mean)) < 1e-13);
}

TEST_CASE("gradient and its adjoint") {
  const WeightedGraph g = triangle();
  Rng rng(4);

  CHECK(gradient(g, VertexFunction::Ones(3)).cwiseAbs().maxCoeff() == 0.0);

  const WeightedGraph two = make_two_point(0.5);
  VertexFunction ind = VertexFunction::Zero(2);
  ind(0) = 1.0;
  const EdgeField dind = gradient(two, ind);
  CHECK(dind(two.edge_index(0, 1)) == Cd(1.0, 0.0));
  CHECK(dind(two.edge_index(1, 0)) == Cd(-1.0, 0.0));

  // Antisymmetry and the integration-by-parts identity <df,dg> = <f,Lg>.
  for (int trial = 0; trial < 10; ++trial) {
    const VertexFunction f = random_function(rng, 3);
    const VertexFunction h = random_function(rng, 3);
    const EdgeField df = gradient(g, f);
    for (int e = 0; e < g.edge_count(); ++e)
      CHECK(std::abs(df(e) + df(g.reversed(e))) < 1e-14);
    CHECK(std::abs(inner_edge(g, df, gradient(g, h)) -
                   inner_m(g, f, apply_laplacian(g, h))) < 1e-12);
  }

  CHECK(gradient_adjoint(g, EdgeField::Zero(g.edge_count())).cwiseAbs().maxCoeff() == 0.0);
  for (int trial = 0; trial < 5; ++trial) {
    const VertexFunction f = random_function(rng, 3);
    const VertexFunction lhs = gradient_adjoint(g, gradient(g, f));
    const VertexFunction rhs = apply_laplacian(g, f);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("gradient adjoint against the pairing-defined matrix") {
  // Assemble the adjoint entrywise from <adj(1_e), 1_x>_m = <1_e, d 1_x>_{b/2}
  // and compare with the closed-form matrix.
  const WeightedGraph g = triangle();
  const int n = g.size(), ne = g.edge_count();
  Eigen::MatrixXd oracle(n, ne);
  for (int e = 0; e < ne; ++e) {
    for (int x = 0; x < n; ++x) {
      VertexFunction ind = VertexFunction::Zero(n);
      ind(x) = 1.0;
      EdgeField basis = EdgeField::Zero(ne);
      basis(e) = 1.0;
      const Cd val = inner_edge(g, basis, gradient(g, ind));
      oracle(x, e) = val.real() / g.measure()(x);
    }
  }
  CHECK((oracle - g.gradient_adjoint_matrix()).cwiseAbs().maxCoeff() < 1e-13);

  // L = d* d as matrices.
  const Eigen::MatrixXd composed = g.gradient_adjoint_matrix() * g.gradient_matrix();
  CHECK((composed - g.laplacian()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("carre du champ") {
  const WeightedGraph g = triangle();
  Rng rng(5);

  CHECK(carre_du_champ(g, VertexFunction::Ones(3)).cwiseAbs().maxCoeff() < 1e-15);

  // Defining identity 2 Gamma(f,h) = conj(Lf) h + conj(f) Lh - L(conj(f) h).
  for (int trial = 0; trial < 10; ++trial) {
    const VertexFunction f = random_function(rng, 3);
    const VertexFunction h = random_function(rng, 3);
    const VertexFunction lhs = 2.0 * carre_du_champ(g, f, h);
    const VertexFunction rhs = apply_laplacian(g, f).conjugate().cwiseProduct(h) +
                               f.conjugate().cwiseProduct(apply_laplacian(g, h)) -
                               apply_laplacian(g, VertexFunction(f.conjugate().cwiseProduct(h)));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);

    const VertexFunction gamma = carre_du_champ(g, f);
    for (int x = 0; x < 3; ++x) {
      CHECK(gamma(x).real() >= -1e-14);
      CHECK(std::abs(gamma(x).imag()) < 1e-14);
    }
    const VertexFunction gamma_conj = carre_du_champ(g, VertexFunction(f.conjugate()));
    CHECK((gamma - gamma_conj).cwiseAbs().maxCoeff() < 1e-13);
  }

  // Complete graph, indicator values.
  Eigen::VectorXd m(4);
  m << 0.1, 0.4, 0.3, 0.2;
  const WeightedGraph complete = make_complete_graph(m);
  for (int x = 0; x < 4; ++x) {
    VertexFunction ind = VertexFunction::Zero(4);
    ind(x) = 1.0;
    const VertexFunction gamma = carre_du_champ(complete, ind);
    CHECK(gamma(x).real() == doctest::Approx(0.5 * (1.0 - m(x))).epsilon(1e-12));
    const Cd total = inner_m(complete, VertexFunction::Ones(4), gamma);
    CHECK(total.real() == doctest::Approx(m(x) * (1.0 - m(x))).epsilon(1e-12));
  }
}

TEST_CASE("gamma2 on complete graphs and against the semigroup derivative") {
  Eigen::VectorXd m(4);
  m << 0.1, 0.4, 0.3, 0.2;
  const WeightedGraph g = make_complete_graph(m);
  Rng rng(6);

  CHECK(gamma2(g, VertexFunction::Ones(4)).cwiseAbs().maxCoeff() < 1e-15);

  // 2 Gamma2(f) = Gamma(f) + <1, Gamma(f)>_m on the complete graph.
  for (int trial = 0; trial < 5; ++trial) {
    const VertexFunction f = random_function(rng, 4);
    const VertexFunction lhs = 2.0 * gamma2(g, f);
    const VertexFunction gamma = carre_du_champ(g, f);
    const Cd total = inner_m(g, VertexFunction::Ones(4), gamma);
    for (int x = 0; x < 4; ++x) CHECK(std::abs(lhs(x) - gamma(x) - total) < 1e-12);
  }

  // Finite difference of t -> P_t Gamma(P_{s-t} f) at t = s/2.
  const WeightedGraph k4 = make_uniform_complete_graph(4);
  const HeatSemigroup heat(k4);
  const VertexFunction f = random_function(rng, 4);
  const double s = 1e-3, h = 1e-4;
  auto phi = [&](double t) {
    const VertexFunction inner = heat.at(s - t).cast<Cd>() * f;
    return VertexFunction(heat.at(t).cast<Cd>() * carre_du_champ(k4, inner));
  };
  const VertexFunction fd = (phi(s / 2 + h) - phi(s / 2 - h)) / (2.0 * h);
  const VertexFunction mid = heat.at(s / 2).cast<Cd>() * f;
  const VertexFunction expected =
      heat.at(s / 2).cast<Cd>() * (2.0 * gamma2(k4, mid));
  CHECK((fd - expected).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("heat semigroup") {
  const WeightedGraph g = triangle();
  const HeatSemigroup heat(g);

  CHECK((heat.at(0.0) - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-13);
  CHECK_THROWS_AS(heat.at(-0.1), std::invalid_argument);

  // Closed form on the symmetric two-point graph: eigenvalues 0 and 1.
  const WeightedGraph two = make_two_point(0.5);
  const HeatSemigroup heat2(two);
  for (double t : {0.1, 0.7, 2.0}) {
    const Eigen::MatrixXd p = heat2.at(t);
    CHECK(p(0, 0) == doctest::Approx(0.5 * (1 + std::exp(-t))).epsilon(1e-12));
    CHECK(p(0, 1) == doctest::Approx(0.5 * (1 - std::exp(-t))).epsilon(1e-12));
    CHECK(p(1, 0) == doctest::Approx(0.5 * (1 - std::exp(-t))).epsilon(1e-12));
  }

  const WeightedGraph k3 = make_uniform_complete_graph(3);
  const HeatSemigroup heat3(k3);
  for (double t : {0.1, 1.0, 10.0}) {
    const Eigen::MatrixXd p = heat3.at(t);
    CHECK((p * Eigen::VectorXd::Ones(3) - Eigen::VectorXd::Ones(3)).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK(p.minCoeff() > -1e-12);
  }

  // Semigroup property, m-self-adjointness, and the scaling-and-squaring
  // cross-check.
  for (double t : {0.2, 1.3}) {
    const Eigen::MatrixXd p = heat.at(t);
    CHECK((heat.at(2 * t) - p * p).cwiseAbs().maxCoeff() < 1e-10);
    const Eigen::MatrixXd weighted = g.measure().asDiagonal() * p;
    CHECK((weighted - weighted.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
  for (double t : {0.5, 3.0, 10.0}) {
    const Eigen::MatrixXd direct = (-t * g.laplacian()).exp();
    CHECK((heat.at(t) - direct).cwiseAbs().maxCoeff() < 1e-9);
  }
}
