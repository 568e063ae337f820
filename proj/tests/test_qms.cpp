#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "curvlab/qms.hpp"
#include "curvlab/rng.hpp"
#include "doctest.h"

using namespace curvlab;
using Cd = std::complex<double>;

namespace {

Matx kron(const Matx& a, const Matx& b) {
  Matx out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Qubit family with a nontrivial modular action: jumps E_12, E_21 with
// omega = +-log(b/a) for sigma = diag(a, b).
QmsGenerator lowering_raising(double a) {
  const double b = 2.0 - a;
  Matx sigma = Matx::Zero(2, 2);
  sigma(0, 0) = a;
  sigma(1, 1) = b;
  Matx e12 = Matx::Zero(2, 2), e21 = Matx::Zero(2, 2);
  e12(0, 1) = 1.0;
  e21(1, 0) = 1.0;
  const double omega = std::log(b / a);
  return QmsGenerator::build({e12, e21}, {omega, -omega}, sigma);
}

Matx pauli(int k) {
  Matx s = Matx::Zero(2, 2);
  switch (k) {
    case 1: s(0, 1) = 1.0; s(1, 0) = 1.0; break;
    case 2: s(0, 1) = Cd(0, -1); s(1, 0) = Cd(0, 1); break;
    default: s(0, 0) = 1.0; s(1, 1) = -1.0; break;
  }
  return s;
}

}  // namespace

TEST_CASE("build_qms validation") {
  const double c = 1.0 / (2.0 * std::sqrt(2.0));
  CHECK_NOTHROW(QmsGenerator::build({c * pauli(1), c * pauli(2), c * pauli(3)},
                                    {0, 0, 0}, Matx::Identity(2, 2)));

  // Identity jump: traceless (b) fails.
  try {
    QmsGenerator::build({Matx::Identity(2, 2)}, {0}, Matx::Identity(2, 2));
    CHECK(false);
  } catch (const std::invalid_argument& err) {
    CHECK(std::string(err.what()).find("(b)") != std::string::npos);
  }

  // sigma != 1 without the eigenvector relation: (d) fails.
  Matx sigma = Matx::Zero(2, 2);
  sigma(0, 0) = 0.5;
  sigma(1, 1) = 1.5;
  try {
    QmsGenerator::build({c * pauli(1)}, {0}, sigma);
    CHECK(false);
  } catch (const std::invalid_argument& err) {
    CHECK(std::string(err.what()).find("(d)") != std::string::npos);
  }

  // Non-orthogonal pair: (a) fails without the orthogonalize flag, passes
  // with it, and the generator is unchanged by the rotation.
  const Matx j1 = c * pauli(3);
  const Matx j2 = c * (0.8 * pauli(3) + 0.6 * pauli(1));
  try {
    QmsGenerator::build({j1, j2}, {0, 0}, Matx::Identity(2, 2));
    CHECK(false);
  } catch (const std::invalid_argument& err) {
    CHECK(std::string(err.what()).find("(a)") != std::string::npos);
  }
  const QmsGenerator rotated =
      QmsGenerator::build({j1, j2}, {0, 0}, Matx::Identity(2, 2), true);
  Matx direct = Matx::Zero(4, 4);
  for (const Matx& v : {j1, j2}) {
    Rng probe(1);
    (void)probe;
    // assemble sum_j (V^2 A - 2 V A V + A V^2) on a basis
    for (int a = 0; a < 4; ++a) {
      Matx unit = Matx::Zero(2, 2);
      unit(a % 2, a / 2) = 1.0;
      const Matx img = v * v * unit - 2.0 * v * unit * v + unit * v * v;
      direct.col(a) += Eigen::Map<const Eigen::VectorXcd>(img.data(), 4);
    }
  }
  CHECK((rotated.superoperator() - direct).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("depolarizing generator acts as A - tau(A) 1") {
  for (int n : {2, 3, 4}) {
    const QmsGenerator gen = QmsGenerator::depolarizing(n);
    CHECK(gen.jump_count() == n * n - 1);
    Rng rng(51);
    for (int trial = 0; trial < 5; ++trial) {
      const Matx a = rng.complex_matrix(n);
      const Matx expected = a - tau(a) * Matx::Identity(n, n);
      CHECK((gen.apply(a) - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
    CHECK(gen.apply(Matx::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-13);
  }
  CHECK_THROWS_AS(QmsGenerator::depolarizing(1), std::invalid_argument);
}

TEST_CASE("GNS symmetry and duality") {
  Rng rng(52);
  for (const QmsGenerator& gen :
       {QmsGenerator::depolarizing(3), lowering_raising(0.6)}) {
    const int n = gen.dim();
    for (int trial = 0; trial < 10; ++trial) {
      const Matx a = rng.complex_matrix(n);
      const Matx b = rng.complex_matrix(n);
      const Cd lhs = tau(Matx(gen.apply(a) * b * gen.sigma()));
      const Cd rhs = tau(Matx(a * gen.apply(b) * gen.sigma()));
      CHECK(std::abs(lhs - rhs) < 1e-11);

      // tau-duality: tau(L(A) B) = tau(A L^dagger(B)).
      const Matx dual = gen.dual_superoperator();
      const Eigen::VectorXcd vb = Eigen::Map<const Eigen::VectorXcd>(b.data(), n * n);
      const Matx ldag_b = Eigen::Map<const Matx>(Eigen::VectorXcd(dual * vb).eval().data(), n, n);
      const Cd lhs2 = tau(Matx(gen.apply(a) * b));
      const Cd rhs2 = tau(Matx(a * ldag_b));
      CHECK(std::abs(lhs2 - rhs2) < 1e-11);
    }
  }
  // Tracial case: the dual equals the generator itself.
  const QmsGenerator dep = QmsGenerator::depolarizing(3);
  CHECK((dep.dual_superoperator() - dep.superoperator()).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("semigroup: closed form, positivity, symmetry") {
  const int n = 3;
  const QmsGenerator gen = QmsGenerator::depolarizing(n);
  Rng rng(53);
  for (double t : {0.1, 1.0, 3.0}) {
    const Matx a = rng.complex_matrix(n);
    const Matx expected = std::exp(-t) * a +
                          (1.0 - std::exp(-t)) * tau(a) * Matx::Identity(n, n);
    CHECK((gen.semigroup_apply(t, a) - expected).cwiseAbs().maxCoeff() < 1e-11);
  }
  CHECK_THROWS_AS(gen.semigroup(-0.5), std::invalid_argument);

  for (const QmsGenerator& g : {QmsGenerator::depolarizing(2), lowering_raising(0.4)}) {
    // Unital, completely positive (Choi PSD), GNS-symmetric, and equal to
    // the scaling-and-squaring exponential.
    for (double t : {0.1, 1.0}) {
      const Matx pt = g.semigroup(t);
      const Matx id = Matx::Identity(g.dim(), g.dim());
      const Eigen::VectorXcd vid = Eigen::Map<const Eigen::VectorXcd>(id.data(), id.size());
      CHECK((pt * vid - vid).cwiseAbs().maxCoeff() < 1e-11);

      Eigen::SelfAdjointEigenSolver<Matx> choi(choi_matrix(pt));
      CHECK(choi.eigenvalues().minCoeff() > -1e-10);

      const Matx direct = (-t * g.superoperator()).exp();
      CHECK((pt - direct).cwiseAbs().maxCoeff() < 1e-10);

      Rng inner(54);
      const Matx a = inner.complex_matrix(g.dim());
      const Matx b = inner.complex_matrix(g.dim());
      const int nn = g.dim();
      const Eigen::VectorXcd va = Eigen::Map<const Eigen::VectorXcd>(a.data(), nn * nn);
      const Matx pa = Eigen::Map<const Matx>(Eigen::VectorXcd(pt * va).eval().data(), nn, nn);
      const Eigen::VectorXcd vb = Eigen::Map<const Eigen::VectorXcd>(b.data(), nn * nn);
      const Matx pb = Eigen::Map<const Matx>(Eigen::VectorXcd(pt * vb).eval().data(), nn, nn);
      CHECK(std::abs(tau(Matx(pa * b * g.sigma())) - tau(Matx(a * pb * g.sigma()))) <
            1e-9);
    }
  }
}

TEST_CASE("gamma and gamma2") {
  Rng rng(55);
  for (const QmsGenerator& gen :
       {QmsGenerator::depolarizing(2), QmsGenerator::depolarizing(3), lowering_raising(0.7)}) {
    const int n = gen.dim();
    CHECK(gen.gamma(Matx::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-13);
    for (int trial = 0; trial < 10; ++trial) {
      const Matx a = rng.complex_matrix(n);
      Eigen::SelfAdjointEigenSolver<Matx> es(gen.gamma(a));
      CHECK(es.eigenvalues().minCoeff() > -1e-11);
    }
  }

  // Dephasing identity Gamma2(A) = (Gamma(A) + E(Gamma(A))) / 2.
  const auto expectation = ConditionalExpectation::blocks(3, {{0, 1}, {2}});
  const QmsGenerator dephasing =
      QmsGenerator::dephasing(expectation, Matx::Identity(3, 3));
  for (int trial = 0; trial < 10; ++trial) {
    const Matx a = rng.complex_matrix(3);
    const Matx gamma = dephasing.gamma(a);
    const Matx lhs = dephasing.gamma2(a);
    const Matx rhs = 0.5 * (gamma + expectation.apply(gamma));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("first-order differential calculus") {
  Rng rng(56);
  for (const QmsGenerator& gen :
       {QmsGenerator::depolarizing(2), lowering_raising(0.6)}) {
    const Fodc fodc(gen);
    const int n = gen.dim();

    CHECK(fodc.flatten(fodc.partial(Matx::Identity(n, n))).cwiseAbs().maxCoeff() <
          1e-14);

    for (int trial = 0; trial < 20; ++trial) {
      const Matx a = rng.complex_matrix(n);
      const Matx b = rng.complex_matrix(n);

      // Gamma(A,B) = (dA | dB).
      const Matx lhs = fodc.pairing(fodc.partial(a), fodc.partial(b));
      CHECK((lhs - gen.gamma(a, b)).cwiseAbs().maxCoeff() < 1e-11);

      // Leibniz rule.
      const auto dab = fodc.partial(a * b);
      const auto da = fodc.partial(a);
      const auto db = fodc.partial(b);
      for (int j = 0; j < fodc.jump_count(); ++j) {
        const Matx residual = dab[j] - a * db[j] - da[j] * b;
        CHECK(residual.cwiseAbs().maxCoeff() < 1e-11);
      }
    }

    // J isometry for tau((.|.) sigma) and commutation with the modular group.
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Matx> xi(fodc.jump_count()), eta(fodc.jump_count());
      for (int j = 0; j < fodc.jump_count(); ++j) {
        xi[j] = rng.complex_matrix(n);
        eta[j] = rng.complex_matrix(n);
      }
      const Cd lhs = tau(Matx(fodc.pairing(fodc.jmap(xi), fodc.jmap(eta)) * gen.sigma()));
      const Cd rhs = tau(Matx(fodc.pairing(eta, xi) * gen.sigma()));
      CHECK(std::abs(lhs - rhs) < 1e-11);

      for (double t : {0.3, 1.7}) {
        const auto jv = fodc.jmap(fodc.modular(t, xi));
        const auto vj = fodc.modular(t, fodc.jmap(xi));
        for (int j = 0; j < fodc.jump_count(); ++j)
          CHECK((jv[j] - vj[j]).cwiseAbs().maxCoeff() < 1e-11);
      }
    }

    // Modular covariance and the J-gradient identity.
    const Matx sh = gen.sigma_power(0.5);
    const Matx shi = gen.sigma_power(-0.5);
    for (int trial = 0; trial < 5; ++trial) {
      const Matx a = rng.complex_matrix(n);
      for (double t : {0.3, 1.7}) {
        const Matx st = gen.sigma_power(Cd(0, t));
        const Matx sti = gen.sigma_power(Cd(0, -t));
        const auto lhs = fodc.partial(st * a * sti);
        const auto rhs = fodc.modular(t, fodc.partial(a));
        for (int j = 0; j < fodc.jump_count(); ++j)
          CHECK((lhs[j] - rhs[j]).cwiseAbs().maxCoeff() < 1e-10);
      }
      const auto lhs = fodc.partial(sh * a.adjoint() * shi);
      const auto rhs = fodc.jmap(fodc.partial(a));
      for (int j = 0; j < fodc.jump_count(); ++j)
        CHECK((lhs[j] - rhs[j]).cwiseAbs().maxCoeff() < 1e-10);
    }

    // sum_j d_j^{dagger,sigma} d_j = L via the flattened matrices.
    const Matx d = fodc.partial_matrix();
    const Matx metric = fodc.gns_metric();
    const Matx gns = kron(Eigen::MatrixXcd(gen.sigma().transpose()),
                          Matx::Identity(n, n)) / n;
    (void)gns;
    const Matx lhs = d.adjoint() * metric * d;
    // <A, L B>_sigma assembled from the generator directly.
    Matx rhs = Matx::Zero(n * n, n * n);
    for (int col = 0; col < n * n; ++col) {
      Matx unit = Matx::Zero(n, n);
      unit(col % n, col / n) = 1.0;
      const Matx lb = gen.apply(unit);
      for (int row = 0; row < n * n; ++row) {
        Matx unit_row = Matx::Zero(n, n);
        unit_row(row % n, row / n) = 1.0;
        rhs(row, col) = tau(Matx(unit_row.adjoint() * lb * gen.sigma()));
      }
    }
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("lambda norms") {
  Rng rng(57);
  const QmsGenerator gen = QmsGenerator::depolarizing(3);
  const Fodc fodc(gen);
  const int n = 3;

  std::vector<Matx> zero(fodc.jump_count(), Matx::Zero(n, n));
  CHECK(lambda_norm(fodc, builtin_mean("logarithmic"), Matx::Identity(n, n), zero) ==
        0.0);

  // Orthogonality of matrix-unit gradients for diagonal rho.
  Matx rho = Matx::Zero(n, n);
  rho(0, 0) = 1.2;
  rho(1, 1) = 0.9;
  rho(2, 2) = 0.9;
  for (const auto& name : builtin_mean_names()) {
    const MeanFunction mean = builtin_mean(name);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) {
            if (k == l || (i == k && j == l)) continue;
            Matx eij = Matx::Zero(n, n), ekl = Matx::Zero(n, n);
            eij(i, j) = 1.0;
            ekl(k, l) = 1.0;
            const Cd inner = lambda_inner(fodc, mean, rho, fodc.partial(eij),
                                          fodc.partial(ekl));
            CHECK(std::abs(inner) < 1e-12);
          }
        }
      }
    }
  }

  // rho = 1: the multiplier collapses to Lambda(e^{omega/2}, e^{-omega/2}).
  const QmsGenerator nontracial = lowering_raising(0.6);
  const Fodc fodc2(nontracial);
  const MeanFunction logm = builtin_mean("logarithmic");
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Matx> xi(fodc2.jump_count());
    for (int j = 0; j < fodc2.jump_count(); ++j) xi[j] = rng.complex_matrix(2);
    const double lhs =
        lambda_norm(fodc2, logm, Matx::Identity(2, 2), xi);
    double rhs = 0.0;
    for (int j = 0; j < fodc2.jump_count(); ++j) {
      const double om = nontracial.omega(j);
      rhs += logm.eval(std::exp(om / 2), std::exp(-om / 2)) *
             tau(Matx(xi[j].adjoint() * xi[j])).real();
    }
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }

  // harmonic <= logarithmic <= arithmetic on sampled fields and densities.
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Matx> xi(fodc.jump_count());
    for (int j = 0; j < fodc.jump_count(); ++j) xi[j] = rng.complex_matrix(n);
    const Matx density = rng.density(n);
    const double h = lambda_norm(fodc, builtin_mean("harmonic"), density, xi);
    const double l = lambda_norm(fodc, builtin_mean("logarithmic"), density, xi);
    const double a = lambda_norm(fodc, builtin_mean("arithmetic"), density, xi);
    CHECK(h <= l + 1e-10 * (1 + std::abs(l)));
    CHECK(l <= a + 1e-10 * (1 + std::abs(a)));
  }

  Matx singular = Matx::Zero(n, n);
  singular(0, 0) = 3.0;
  CHECK_THROWS_AS(lambda_norm(fodc, logm, singular, zero), std::invalid_argument);
}

TEST_CASE("dephasing builders") {
  // E = trace gives the depolarizing generator.
  const QmsGenerator dep = QmsGenerator::dephasing(ConditionalExpectation::trace(3),
                                                   Matx::Identity(3, 3));
  CHECK((dep.superoperator() - QmsGenerator::depolarizing(3).superoperator())
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  // E = identity (single block) gives the zero generator.
  const QmsGenerator zero = QmsGenerator::dephasing(
      ConditionalExpectation::blocks(3, {{0, 1, 2}}), Matx::Identity(3, 3));
  CHECK(zero.superoperator().cwiseAbs().maxCoeff() < 1e-14);
  CHECK(zero.jump_count() == 0);

  // Projection pinching: L(A) = pA + Ap - 2pAp.
  Matx p = Matx::Zero(2, 2);
  p(0, 0) = 1.0;
  const QmsGenerator pinch = QmsGenerator::dephasing(
      ConditionalExpectation::projections({p, Matx::Identity(2, 2) - p}),
      Matx::Identity(2, 2));
  Rng rng(58);
  for (int trial = 0; trial < 5; ++trial) {
    const Matx a = rng.complex_matrix(2);
    const Matx expected = p * a + a * p - 2.0 * p * a * p;
    CHECK((pinch.apply(a) - expected).cwiseAbs().maxCoeff() < 1e-12);
  }

  // Nontracial block-diagonal sigma is accepted; incompatible sigma is not.
  Matx sigma = Matx::Zero(3, 3);
  sigma(0, 0) = 0.6;
  sigma(1, 1) = 1.2;
  sigma(2, 2) = 1.2;
  CHECK_NOTHROW(
      QmsGenerator::dephasing(ConditionalExpectation::blocks(3, {{0, 1}, {2}}), sigma));

  Matx bad = sigma;
  bad(0, 1) = bad(1, 0) = 0.3;  // off-block coherence breaks compatibility
  Matx cross = Matx::Zero(3, 3);
  cross(0, 0) = 0.5;
  cross(1, 1) = 0.5;
  cross(0, 1) = cross(1, 0) = 0.5;  // projection not block diagonal
  CHECK_THROWS_AS(QmsGenerator::dephasing(
                      ConditionalExpectation::blocks(3, {{0}, {1}, {2}}), bad),
                  std::invalid_argument);
  CHECK_THROWS_AS(QmsGenerator::dephasing(ConditionalExpectation::trace(3), sigma),
                  std::invalid_argument);
}

TEST_CASE("commuting sums") {
  // Two commuting projections on M_4 = M_2 (x) M_2.
  Matx p = Matx::Zero(2, 2);
  p(0, 0) = 1.0;
  const Matx id2 = Matx::Identity(2, 2);
  Matx p1 = kron(p, id2), p2 = kron(id2, p);

  auto family_for = [&](const Matx& proj, double alpha) {
    JumpFamily family;
    family.ops = {std::sqrt(alpha) * (proj - tau(proj) * Matx::Identity(4, 4))};
    family.omegas = {0.0};
    return family;
  };

  const QmsGenerator sum = QmsGenerator::commuting_sum(
      {family_for(p1, 1.0), family_for(p2, 2.0)}, Matx::Identity(4, 4));
  Rng rng(59);
  for (int trial = 0; trial < 5; ++trial) {
    const Matx a = rng.complex_matrix(4);
    const Matx expected = 1.0 * (p1 * a + a * p1 - 2.0 * p1 * a * p1) +
                          2.0 * (p2 * a + a * p2 - 2.0 * p2 * a * p2);
    CHECK((sum.apply(a) - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK(sum.family_count() == 2);

  // Single family reduces to build_qms.
  const QmsGenerator single =
      QmsGenerator::commuting_sum({family_for(p1, 1.0)}, Matx::Identity(4, 4));
  const QmsGenerator direct = QmsGenerator::build(family_for(p1, 1.0).ops, {0.0},
                                                  Matx::Identity(4, 4));
  CHECK((single.superoperator() - direct.superoperator()).cwiseAbs().maxCoeff() <
        1e-14);

  // Non-commuting families are rejected.
  const double c = 1.0 / (2.0 * std::sqrt(2.0));
  JumpFamily fx{{c * pauli(1)}, {0.0}, {}};
  JumpFamily fz{{c * pauli(3)}, {0.0}, {}};
  CHECK_THROWS_AS(QmsGenerator::commuting_sum({fx, fz}, Matx::Identity(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("Pimsner-Popa index") {
  for (int n : {2, 3, 4}) {
    CHECK(pimsner_popa(ConditionalExpectation::trace(n)) ==
          doctest::Approx(1.0 / n).epsilon(1e-12));
  }

  // E = identity: C = 1.
  CHECK(pimsner_popa(ConditionalExpectation::blocks(3, {{0, 1, 2}})) ==
        doctest::Approx(1.0).epsilon(1e-6));

  // Diagonal pinching on M_2 against a dense Bloch-sphere grid.
  const auto diag2 = ConditionalExpectation::blocks(2, {{0}, {1}});
  const double sampled = pimsner_popa(diag2);
  double grid_inf = 1.0;
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const double theta = 3.14159265358979 * i / 100;
      const double phi = 2 * 3.14159265358979 * j / 100;
      Eigen::VectorXcd v(2);
      v << std::cos(theta / 2), std::exp(Cd(0, phi)) * std::sin(theta / 2);
      const Matx b = diag2.apply(Matx(v * v.adjoint()));
      Eigen::SelfAdjointEigenSolver<Matx> es(b);
      double quad = 0.0;
      bool ok = true;
      for (int k = 0; k < 2; ++k) {
        const Cd comp = es.eigenvectors().col(k).adjoint() * v;
        if (es.eigenvalues()(k) > 1e-12)
          quad += std::norm(comp) / es.eigenvalues()(k);
        else if (std::abs(comp) > 1e-8)
          ok = false;
      }
      if (ok && quad > 0) grid_inf = std::min(grid_inf, 1.0 / quad);
    }
  }
  CHECK(sampled == doctest::Approx(grid_inf).epsilon(1e-6));
  CHECK(sampled == doctest::Approx(0.5).epsilon(1e-9));

  // Two unequal blocks on M_3: the infimum is 1/(number of blocks).
  CHECK(pimsner_popa(ConditionalExpectation::blocks(3, {{0, 1}, {2}})) ==
        doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("density validation") {
  CHECK_NOTHROW(validate_density(Matx::Identity(3, 3), true));
  Matx bad = Matx::Identity(2, 2);
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(validate_density(bad, false), std::invalid_argument);
  CHECK_THROWS_AS(validate_density(Matx(2.0 * Matx::Identity(2, 2)), false),
                  std::invalid_argument);
  Matx singular = Matx::Zero(2, 2);
  singular(0, 0) = 2.0;
  CHECK_THROWS_AS(validate_density(singular, true), std::invalid_argument);
  CHECK_NOTHROW(validate_density(singular, false));
}
