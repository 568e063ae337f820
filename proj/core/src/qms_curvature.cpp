#include "curvlab/qms_curvature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "curvlab/pencil.hpp"
#include "curvlab/rng.hpp"

namespace curvlab {

namespace {

using Cd = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

double op_scale(const Matx& a) {
  return a.size() ? std::max(1.0, a.cwiseAbs().maxCoeff()) : 1.0;
}

Matx pseudo_inverse_psd(const Matx& a, double cut_rel = 1e-12) {
  Eigen::SelfAdjointEigenSolver<Matx> es(a);
  const double cut = cut_rel * std::max(1e-300, es.eigenvalues().maxCoeff());
  Matx out = Matx::Zero(a.rows(), a.cols());
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > cut)
      out += (1.0 / es.eigenvalues()(i)) *
             (es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint());
  }
  return out;
}

// Matrix of the modular group V_t on flattened fields.
Matx modular_matrix(const Fodc& fodc, double t) {
  const int dim = fodc.dim();
  Matx out(dim, dim);
  for (int a = 0; a < dim; ++a) {
    Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim);
    basis(a) = 1.0;
    out.col(a) = fodc.flatten(fodc.modular(t, fodc.unflatten(basis)));
  }
  return out;
}

Eigen::VectorXcd jmap_flat(const Fodc& fodc, const Eigen::VectorXcd& v) {
  return fodc.flatten(fodc.jmap(fodc.unflatten(v)));
}

QmsHodge certify(const Fodc& fodc, QmsHodge hodge) {
  const int dim = fodc.dim();
  if (dim == 0) {  // trivial module: every identity holds vacuously
    hodge.certified = true;
    return hodge;
  }
  const Matx d = fodc.partial_matrix();
  const Matx dl = d * fodc.generator().superoperator();
  hodge.intertwine_residual = (hodge.matrix * d - dl).cwiseAbs().maxCoeff();

  double rj = 0.0;
  for (int a = 0; a < dim; ++a) {
    Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim);
    basis(a) = 1.0;
    const Eigen::VectorXcd lhs = hodge.matrix * jmap_flat(fodc, basis);
    const Eigen::VectorXcd rhs = jmap_flat(fodc, Eigen::VectorXcd(hodge.matrix * basis));
    rj = std::max(rj, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  hodge.jcommute_residual = rj;

  double rm = 0.0;
  for (double t : {0.3, 1.7}) {
    const Matx vt = modular_matrix(fodc, t);
    rm = std::max(rm, (hodge.matrix * vt - vt * hodge.matrix).cwiseAbs().maxCoeff());
  }
  hodge.modular_residual = rm;

  const double scale = std::max(op_scale(dl), op_scale(hodge.matrix));
  hodge.certified = hodge.intertwine_residual <= 1e-10 * scale &&
                    hodge.jcommute_residual <= 1e-10 * scale &&
                    hodge.modular_residual <= 1e-10 * scale;
  return hodge;
}

// Gamma2-type form of a Hodge operator evaluated on two fields:
// ((L_vec xi | eta) + (xi | L_vec eta) - L (xi|eta)) / 2.
Matx hodge_form(const Fodc& fodc, const QmsHodge& hodge, const Eigen::VectorXcd& xi,
                const Eigen::VectorXcd& eta) {
  const auto xs = fodc.unflatten(xi);
  const auto es = fodc.unflatten(eta);
  const auto lxs = fodc.unflatten(Eigen::VectorXcd(hodge.matrix * xi));
  const auto les = fodc.unflatten(Eigen::VectorXcd(hodge.matrix * eta));
  return 0.5 * (fodc.pairing(lxs, es) + fodc.pairing(xs, les) -
                fodc.generator().apply(fodc.pairing(xs, es)));
}

// Real representation of a complex Hermitian form.
Eigen::MatrixXd real_form(const Matx& f) {
  const int n = static_cast<int>(f.rows());
  Eigen::MatrixXd out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = f.real();
  out.bottomRightCorner(n, n) = f.real();
  out.topRightCorner(n, n) = -f.imag();
  out.bottomLeftCorner(n, n) = f.imag();
  return 0.5 * (out + out.transpose()).eval();
}

// Orthonormal basis (columns) of the fixed subspace of the antilinear
// involution J, inside the real representation of the field space.
Eigen::MatrixXd jreal_basis(const Fodc& fodc) {
  const int dim = fodc.dim();
  Eigen::MatrixXd jr(2 * dim, 2 * dim);
  for (int a = 0; a < dim; ++a) {
    Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim);
    basis(a) = 1.0;
    const Eigen::VectorXcd jb = jmap_flat(fodc, basis);
    jr.col(a).head(dim) = jb.real();
    jr.col(a).tail(dim) = jb.imag();
    const Eigen::VectorXcd jib = jmap_flat(fodc, Eigen::VectorXcd(Cd(0, 1) * basis));
    jr.col(dim + a).head(dim) = jib.real();
    jr.col(dim + a).tail(dim) = jib.imag();
  }
  const Eigen::MatrixXd proj =
      0.5 * (Eigen::MatrixXd::Identity(2 * dim, 2 * dim) + jr);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(proj);
  qr.setThreshold(1e-10);
  const int rank = static_cast<int>(qr.rank());
  Eigen::MatrixXd q = qr.householderQ();
  return q.leftCols(rank);
}

Eigen::VectorXcd state_from_coords(const Eigen::VectorXd& x, int n) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = Cd(x(i), x(n + i));
  const double norm = v.norm();
  return norm < 1e-12 ? Eigen::VectorXcd::Unit(n, 0).eval() : Eigen::VectorXcd(v / norm);
}

}  // namespace

QmsHodge splitting_hodge_qms(const Fodc& fodc, double K) {
  QmsHodge hodge;
  hodge.construction = QmsHodge::Construction::Splitting;
  hodge.level = K;
  const int dim = fodc.dim();
  if (dim == 0) {
    hodge.matrix = Matx::Zero(0, 0);
    return certify(fodc, std::move(hodge));
  }
  const Matx d = fodc.partial_matrix();
  const Matx g = fodc.gns_metric();
  const Matx gram = d.adjoint() * g * d;
  const Matx dplus = pseudo_inverse_psd(gram) * d.adjoint() * g;
  const Matx proj = d * dplus;
  hodge.matrix = d * fodc.generator().superoperator() * dplus +
                 2.0 * K * (Matx::Identity(dim, dim) - proj);
  hodge = certify(fodc, std::move(hodge));
  if (!hodge.certified)
    throw std::logic_error("splitting Hodge operator failed certification");
  return hodge;
}

QmsHodge product_hodge(const QmsGenerator& gen, const std::vector<double>& per_family_K) {
  const int m = gen.family_count();
  const int n = gen.dim();
  std::vector<QmsGenerator> family_gens;
  family_gens.reserve(m);
  for (int k = 0; k < m; ++k)
    family_gens.push_back(
        QmsGenerator::build(gen.family(k).ops, gen.family(k).omegas, gen.sigma()));

  double level = 0.0;
  if (!per_family_K.empty()) {
    if (per_family_K.size() != 1)
      throw std::invalid_argument("product Hodge takes one common level");
    level = per_family_K[0];
  } else {
    level = kInf;
    QmsCurvatureConfig cfg;
    cfg.samples = 64;
    cfg.steps = 40;
    cfg.seed = 7;
    for (int k = 0; k < m; ++k)
      level = std::min(level, be_curvature_qms(family_gens[k], cfg).bound);
    if (!std::isfinite(level)) level = 0.0;
  }

  const Fodc fodc(gen);
  QmsHodge hodge;
  hodge.construction = QmsHodge::Construction::Product;
  hodge.level = level;
  hodge.matrix = Matx::Zero(fodc.dim(), fodc.dim());

  int offset = 0;
  for (int k = 0; k < m; ++k) {
    const Fodc family_fodc(family_gens[k]);
    const QmsHodge family_hodge = splitting_hodge_qms(family_fodc, level);
    const int dk = family_gens[k].jump_count();
    const int block = dk * n * n;
    hodge.matrix.block(offset, offset, block, block) = family_hodge.matrix;
    for (int l = 0; l < m; ++l) {
      if (l == k) continue;
      const Matx ll = gen.family_superoperator(l);
      for (int j = 0; j < dk; ++j)
        hodge.matrix.block(offset + j * n * n, offset + j * n * n, n * n, n * n) += ll;
    }
    offset += block;
  }

  hodge = certify(fodc, std::move(hodge));
  if (!hodge.certified)
    throw std::logic_error("product Hodge operator failed certification");
  return hodge;
}

QmsHodge custom_qms_hodge(const Fodc& fodc, const Matx& matrix) {
  if (matrix.rows() != fodc.dim() || matrix.cols() != fodc.dim())
    throw std::invalid_argument("Hodge matrix must act on the flattened field space");
  QmsHodge hodge;
  hodge.construction = QmsHodge::Construction::Custom;
  hodge.matrix = matrix;
  return certify(fodc, std::move(hodge));
}

CurvatureReport be_curvature_qms(const QmsGenerator& gen, const QmsCurvatureConfig& cfg) {
  const int n = gen.dim();
  const int nb = n * n;

  // Matrix-unit basis (all A) and Hermitian basis (self-adjoint A).
  std::vector<Matx> units(nb), herms(nb);
  for (int a = 0; a < nb; ++a) {
    Matx u = Matx::Zero(n, n);
    u(a % n, a / n) = 1.0;
    units[a] = u;
  }
  {
    int c = 0;
    for (int i = 0; i < n; ++i) {
      Matx h = Matx::Zero(n, n);
      h(i, i) = 1.0;
      herms[c++] = h;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Matx h = Matx::Zero(n, n);
        h(i, j) = h(j, i) = 1.0 / std::sqrt(2.0);
        herms[c++] = h;
        Matx k = Matx::Zero(n, n);
        k(i, j) = Cd(0.0, -1.0 / std::sqrt(2.0));
        k(j, i) = Cd(0.0, 1.0 / std::sqrt(2.0));
        herms[c++] = k;
      }
    }
  }

  auto pair_tensors = [&](const std::vector<Matx>& basis) {
    std::vector<Matx> g2(nb * nb), g1(nb * nb);
    for (int a = 0; a < nb; ++a) {
      for (int b = 0; b < nb; ++b) {
        g1[a * nb + b] = gen.gamma(basis[a], basis[b]);
        g2[a * nb + b] = gen.gamma2(basis[a], basis[b]);
      }
    }
    return std::make_pair(std::move(g2), std::move(g1));
  };
  const auto [g2_units, g1_units] = pair_tensors(units);
  const auto [g2_herms, g1_herms] = pair_tensors(herms);

  auto value_at = [&](const Eigen::VectorXcd& v, bool hermitian_only,
                      Eigen::VectorXcd* witness) {
    const auto& g2 = hermitian_only ? g2_herms : g2_units;
    const auto& g1 = hermitian_only ? g1_herms : g1_units;
    Matx left(nb, nb), right(nb, nb);
    for (int a = 0; a < nb; ++a) {
      for (int b = 0; b < nb; ++b) {
        left(a, b) = (v.adjoint() * g2[a * nb + b] * v)(0, 0);
        right(a, b) = (v.adjoint() * g1[a * nb + b] * v)(0, 0);
      }
    }
    double value = kInf;
    if (hermitian_only) {
      auto sol = pencil_min_eig(Eigen::MatrixXd(left.real()),
                                Eigen::MatrixXd(right.real()), cfg.truncation);
      if (sol) {
        value = sol->value;
        if (witness) *witness = sol->witness.cast<Cd>();
      }
    } else {
      auto sol = pencil_min_eig(Matx(0.5 * (left + left.adjoint())),
                                Matx(0.5 * (right + right.adjoint())), cfg.truncation);
      if (sol) {
        value = sol->value;
        if (witness) *witness = sol->witness;
      }
    }
    return value;
  };

  SphereSearchConfig scfg;
  scfg.samples = cfg.samples;
  scfg.steps = cfg.steps;
  scfg.seed = cfg.seed;
  auto general = sphere_search(
      [&](const Eigen::VectorXd& x) {
        return value_at(state_from_coords(x, n), false, nullptr);
      },
      2 * n, scfg);
  auto hermitian = sphere_search(
      [&](const Eigen::VectorXd& x) {
        return value_at(state_from_coords(x, n), true, nullptr);
      },
      2 * n, scfg);

  CurvatureReport report;
  report.kind = "bakry_emery_qms";
  report.mode = "sampled";
  report.samples = cfg.samples;
  report.seed = cfg.seed;
  report.truncation = cfg.truncation;
  report.bound = general.value;
  report.restricted_bound = hermitian.value;
  if (std::isfinite(general.value)) {
    const Eigen::VectorXcd v = state_from_coords(general.argmin, n);
    Eigen::VectorXcd coeffs;
    value_at(v, false, &coeffs);
    Matx a = Matx::Zero(n, n);
    for (int i = 0; i < nb && i < coeffs.size(); ++i) a += coeffs(i) * units[i];
    CurvatureWitness w;
    w.site = "matrix";
    w.space = "matrix_entries_column_major";
    for (int j = 0; j < a.cols(); ++j)
      for (int i = 0; i < a.rows(); ++i) w.vector.push_back(a(i, j));
    for (int i = 0; i < v.size(); ++i) w.state.push_back(v(i));
    report.witness = w;
  }
  report.metadata["restricted"] = "hermitian";
  return report;
}

CurvatureReport intertwining_curvature_qms(const Fodc& fodc, const QmsHodge& hodge,
                                           const QmsCurvatureConfig& cfg) {
  if (!hodge.certified)
    throw std::invalid_argument("Hodge operator is not certified");
  const int n = fodc.matrix_dim();
  const int dim = fodc.dim();

  CurvatureReport report;
  report.kind = "intertwining_qms";
  report.mode = "sampled";
  report.samples = cfg.samples;
  report.seed = cfg.seed;
  report.truncation = cfg.truncation;
  report.metadata["construction"] =
      hodge.construction == QmsHodge::Construction::Splitting ? "splitting"
      : hodge.construction == QmsHodge::Construction::Product ? "product"
                                                              : "custom";
  if (hodge.construction != QmsHodge::Construction::Custom)
    report.metadata["level"] = hodge.level;

  if (dim == 0) {
    report.bound = kInf;
    report.restricted_bound = kInf;
    return report;
  }

  // Pair tensors over the flattened field basis.
  std::vector<Matx> tform(dim * dim), rform(dim * dim);
  {
    std::vector<std::vector<Matx>> basis(dim), lbasis(dim);
    for (int a = 0; a < dim; ++a) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
      e(a) = 1.0;
      basis[a] = fodc.unflatten(e);
      lbasis[a] = fodc.unflatten(Eigen::VectorXcd(hodge.matrix * e));
    }
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        const Matx pair_ab = fodc.pairing(basis[a], basis[b]);
        tform[a * dim + b] = 0.5 * (fodc.pairing(lbasis[a], basis[b]) +
                                    fodc.pairing(basis[a], lbasis[b]) -
                                    fodc.generator().apply(pair_ab));
        rform[a * dim + b] = pair_ab;
      }
    }
  }

  const Eigen::MatrixXd jbasis = jreal_basis(fodc);

  auto forms_at = [&](const Eigen::VectorXcd& v, Matx& left, Matx& right) {
    left.resize(dim, dim);
    right.resize(dim, dim);
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        left(a, b) = (v.adjoint() * tform[a * dim + b] * v)(0, 0);
        right(a, b) = (v.adjoint() * rform[a * dim + b] * v)(0, 0);
      }
    }
    left = 0.5 * (left + left.adjoint()).eval();
    right = 0.5 * (right + right.adjoint()).eval();
  };

  auto value_general = [&](const Eigen::VectorXcd& v, Eigen::VectorXcd* witness) {
    Matx left, right;
    forms_at(v, left, right);
    auto sol = pencil_min_eig(left, right, cfg.truncation);
    if (!sol) return kInf;
    if (witness) *witness = sol->witness;
    return sol->value;
  };
  auto value_jreal = [&](const Eigen::VectorXcd& v) {
    Matx left, right;
    forms_at(v, left, right);
    const Eigen::MatrixXd lr = jbasis.transpose() * real_form(left) * jbasis;
    const Eigen::MatrixXd rr = jbasis.transpose() * real_form(right) * jbasis;
    auto sol = pencil_min_eig(lr, rr, cfg.truncation);
    return sol ? sol->value : kInf;
  };

  SphereSearchConfig scfg;
  scfg.samples = cfg.samples;
  scfg.steps = cfg.steps;
  scfg.seed = cfg.seed;
  auto general = sphere_search(
      [&](const Eigen::VectorXd& x) {
        return value_general(state_from_coords(x, n), nullptr);
      },
      2 * n, scfg);
  auto jreal = sphere_search(
      [&](const Eigen::VectorXd& x) { return value_jreal(state_from_coords(x, n)); },
      2 * n, scfg);

  report.bound = general.value;
  report.restricted_bound = jreal.value;
  if (std::isfinite(general.value)) {
    const Eigen::VectorXcd v = state_from_coords(general.argmin, n);
    Eigen::VectorXcd xi;
    value_general(v, &xi);
    CurvatureWitness w;
    w.site = "field";
    w.space = "flattened_field";
    for (int i = 0; i < xi.size(); ++i) w.vector.push_back(xi(i));
    for (int i = 0; i < v.size(); ++i) w.state.push_back(v(i));
    report.witness = w;
  }
  report.metadata["restricted"] = "jreal";
  return report;
}

double witness_upper_bound(const Fodc& fodc, const QmsHodge& hodge,
                           const std::vector<Matx>& xi) {
  if (!hodge.certified)
    throw std::invalid_argument("Hodge operator is not certified");
  const Eigen::VectorXcd flat = fodc.flatten(xi);
  const Matx r = fodc.pairing(xi, xi);
  if (r.cwiseAbs().maxCoeff() <= 1e-14)
    throw std::invalid_argument("witness field has (xi|xi) = 0");
  const Matx t = hodge_form(fodc, hodge, flat, flat);
  auto sol = pencil_min_eig(Matx(0.5 * (t + t.adjoint())), Matx(0.5 * (r + r.adjoint())));
  if (!sol) throw std::invalid_argument("witness field has (xi|xi) = 0");
  return sol->value;
}

std::vector<double> default_time_grid() { return {0.05, 0.1, 0.25, 0.5, 1.0, 2.0, 4.0}; }

std::optional<QmsGeViolation> ge_check_qms(const QmsGenerator& gen,
                                           const MeanFunction& mean, double K,
                                           const Matx& a, const Matx& rho,
                                           const std::vector<double>& t_grid) {
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * op_scale(a))
    throw std::invalid_argument("gradient estimate requires self-adjoint A");
  validate_density(rho, true);
  const Fodc fodc(gen);
  for (double t : t_grid) {
    const Matx at = gen.semigroup_apply(t, a);
    const Matx rho_t = gen.dual_semigroup_apply(t, rho);
    const double lhs = lambda_norm(fodc, mean, rho, fodc.partial(at));
    const double rhs =
        std::exp(-2.0 * K * t) * lambda_norm(fodc, mean, rho_t, fodc.partial(a));
    if (lhs > rhs * (1.0 + 1e-9) + 1e-12) return QmsGeViolation{t, lhs, rhs, a, rho};
  }
  return std::nullopt;
}

std::optional<QmsGeViolation> ge_sweep_qms(const QmsGenerator& gen,
                                           const MeanFunction& mean, double K,
                                           int samples, std::uint64_t seed,
                                           const std::vector<double>& t_grid) {
  Rng rng(seed);
  const int n = gen.dim();
  for (int i = 0; i < samples; ++i) {
    const Matx a = rng.hermitian(n);
    const Matx rho = rng.density(n);
    auto violation = ge_check_qms(gen, mean, K, a, rho, t_grid);
    if (violation) return violation;
  }
  return std::nullopt;
}

std::optional<double> ge_derivative_estimate(const QmsGenerator& gen,
                                             const MeanFunction& mean, const Matx& a,
                                             const Matx& rho) {
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * op_scale(a))
    throw std::invalid_argument("derivative estimate requires self-adjoint A");
  const int n = gen.dim();
  Eigen::SelfAdjointEigenSolver<Matx> es(rho);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("rho must be positive definite");
  const Eigen::VectorXd lam = es.eigenvalues();
  const Matx u = es.eigenvectors();

  const Fodc fodc(gen);
  const auto da = fodc.partial(a);
  const auto dla = fodc.partial(gen.apply(a));
  const Matx ldag_rho = [&] {
    const Matx dual = gen.dual_superoperator();
    Eigen::Map<const Eigen::VectorXcd> vr(rho.data(), rho.size());
    Eigen::VectorXcd out = dual * vr;
    return Matx(Eigen::Map<const Matx>(out.data(), n, n));
  }();
  const Matx eta = -(u.adjoint() * ldag_rho * u);

  double den = 0.0;
  double cross = 0.0;
  double dnorm = 0.0;
  for (int j = 0; j < fodc.jump_count(); ++j) {
    const double om = gen.omega(j);
    const double ep = std::exp(om / 2.0);
    const Matx xj = u.adjoint() * da[j] * u;
    const Matx lj = u.adjoint() * dla[j] * u;
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        const double mult = mean.eval(ep * lam(p), lam(q) / ep);
        den += mult * std::norm(xj(p, q));
        cross += 2.0 * mult * (std::conj(lj(p, q)) * xj(p, q)).real();
        Cd dg = 0.0;
        for (int r = 0; r < n; ++r) {
          const double dd1 =
              ep * divided_difference(mean, 1, ep * lam(p), ep * lam(r), lam(q) / ep);
          const double dd2 =
              (1.0 / ep) *
              divided_difference(mean, 2, lam(q) / ep, lam(r) / ep, ep * lam(p));
          dg += dd1 * eta(p, r) * xj(r, q) + dd2 * xj(p, r) * eta(r, q);
        }
        dnorm += (std::conj(xj(p, q)) * dg).real();
      }
    }
  }
  den /= n;
  cross /= n;
  dnorm /= n;
  if (den <= 1e-14) return std::nullopt;
  return (cross + dnorm) / (2.0 * den);
}

double ge_derivative_infimum(const QmsGenerator& gen, const MeanFunction& mean,
                             int samples, std::uint64_t seed) {
  Rng rng(seed);
  const int n = gen.dim();
  double inf = kInf;
  for (int i = 0; i < samples; ++i) {
    const Matx a = rng.hermitian(n);
    const Matx rho = rng.density(n);
    auto k = ge_derivative_estimate(gen, mean, a, rho);
    if (k) inf = std::min(inf, *k);
  }
  return inf;
}

namespace {

double relative_entropy(const Matx& rho, const Matx& sigma) {
  Eigen::SelfAdjointEigenSolver<Matx> er(rho);
  Eigen::SelfAdjointEigenSolver<Matx> es(sigma);
  const int n = static_cast<int>(rho.rows());
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double l = std::max(er.eigenvalues()(i), 1e-14);
    if (er.eigenvalues()(i) > 1e-14) s += er.eigenvalues()(i) * std::log(l);
  }
  // tau(rho log sigma) through the spectral decomposition of sigma.
  Matx log_sigma = Matx::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double l = std::max(es.eigenvalues()(i), 1e-14);
    log_sigma += std::log(l) * (es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint());
  }
  return s / n - (rho * log_sigma).trace().real() / n;
}

}  // namespace

std::optional<MlsiViolation> mlsi_decay_check(const QmsGenerator& gen, double rate,
                                              const Matx& rho0,
                                              const std::vector<double>& t_grid) {
  if ((rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * op_scale(rho0))
    throw std::invalid_argument("state must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Matx> es(rho0);
  if (es.eigenvalues().minCoeff() < -1e-12)
    throw std::invalid_argument("state must be positive semidefinite");
  if (std::abs(tau(rho0).real() - 1.0) > 1e-10)
    throw std::invalid_argument("state must have normalized trace 1");

  const double d0 = relative_entropy(rho0, gen.sigma());
  for (double t : t_grid) {
    const Matx rho_t = gen.dual_semigroup_apply(t, rho0);
    const double lhs = relative_entropy(rho_t, gen.sigma());
    const double rhs = std::exp(-rate * t) * d0;
    if (lhs > rhs + 1e-10 * std::max(1.0, std::abs(rhs)) + 1e-12)
      return MlsiViolation{t, lhs, rhs, rho0};
  }
  return std::nullopt;
}

std::optional<MlsiViolation> mlsi_sweep(const QmsGenerator& gen, double rate,
                                        int samples, std::uint64_t seed,
                                        const std::vector<double>& t_grid) {
  Rng rng(seed);
  const int n = gen.dim();
  for (int i = 0; i < samples; ++i) {
    const Eigen::VectorXcd v = rng.complex_unit_vector(n);
    const Matx pure = static_cast<double>(n) * (v * v.adjoint());
    const double u = rng.uniform();
    double w;  // mixing weight toward the stationary state
    switch (i % 3) {
      case 0: w = u; break;
      case 1: w = u * u * u; break;
      default: w = 1.0 - u * u * u; break;
    }
    const Matx rho0 = (1.0 - w) * pure + w * gen.sigma();
    auto violation = mlsi_decay_check(gen, rate, rho0, t_grid);
    if (violation) return violation;
  }
  return std::nullopt;
}

}  // namespace curvlab
