#include "curvlab/graph_curvature.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "curvlab/pencil.hpp"

namespace curvlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Diagonal matrix of the quadratic form xi -> vec_gamma(xi)(x).
Eigen::VectorXd vec_gamma_weights(const WeightedGraph& g, int x) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edges()[e].first == x) w(e) = g.edge_half_weight()(e) / g.measure()(x);
  }
  return w;
}

EdgeField jmap_column(const WeightedGraph& g, const EdgeField& xi) {
  EdgeField out(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) out(e) = -std::conj(xi(g.reversed(e)));
  return out;
}

// Residuals of the two certification identities. The J identity is checked
// on the standard basis; for an antilinear J the i-rotated basis gives the
// same residual magnitudes.
std::pair<double, double> certification_residuals(const WeightedGraph& g,
                                                  const Eigen::MatrixXcd& h) {
  const Eigen::MatrixXd dl = g.gradient_matrix() * g.laplacian();
  const double r1 = (h * g.gradient_matrix() - dl).cwiseAbs().maxCoeff();
  double r2 = 0.0;
  for (int e = 0; e < g.edge_count(); ++e) {
    EdgeField basis = EdgeField::Zero(g.edge_count());
    basis(e) = 1.0;
    const EdgeField lhs = h * jmap_column(g, basis);
    const EdgeField rhs = jmap_column(g, EdgeField(h * basis));
    r2 = std::max(r2, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return {r1, r2};
}

HodgeOperator finish_hodge(const WeightedGraph& g, HodgeOperator hodge) {
  auto [r1, r2] = certification_residuals(g, hodge.matrix);
  hodge.intertwine_residual = r1;
  hodge.jcommute_residual = r2;
  const double scale =
      std::max(1.0, (g.gradient_matrix() * g.laplacian()).cwiseAbs().maxCoeff());
  hodge.certified = r1 <= 1e-10 * scale && r2 <= 1e-10 * std::max(1.0, hodge.matrix.cwiseAbs().maxCoeff());
  return hodge;
}

CurvatureReport per_vertex_pencil_report(
    const WeightedGraph& g, const std::string& kind,
    const std::function<Eigen::MatrixXcd(int)>& left_form,
    const std::function<Eigen::VectorXd(int)>& right_weights, bool real_path,
    double truncation, const std::string& witness_space) {
  CurvatureReport report;
  report.kind = kind;
  report.mode = "exact_pencil";
  report.truncation = truncation;
  report.bound = kInf;
  int best = -1;
  Eigen::VectorXcd best_witness;
  for (int x = 0; x < g.size(); ++x) {
    const Eigen::VectorXd rw = right_weights(x);
    const Eigen::MatrixXcd lf = left_form(x);
    double value = kInf;
    Eigen::VectorXcd witness;
    if (real_path) {
      auto sol = pencil_min_eig(Eigen::MatrixXd(lf.real()),
                                Eigen::MatrixXd(rw.asDiagonal()), truncation);
      if (sol) {
        value = sol->value;
        witness = sol->witness.cast<std::complex<double>>();
      }
    } else {
      auto sol = pencil_min_eig(lf, Eigen::MatrixXcd(rw.cast<std::complex<double>>().asDiagonal()),
                                truncation);
      if (sol) {
        value = sol->value;
        witness = sol->witness;
      }
    }
    report.per_site.emplace_back(g.label(x), value);
    if (value < report.bound) {
      report.bound = value;
      best = x;
      best_witness = witness;
    }
  }
  if (best >= 0) {
    CurvatureWitness w;
    w.site = g.label(best);
    w.space = witness_space;
    w.vector.assign(best_witness.data(), best_witness.data() + best_witness.size());
    report.witness = w;
  }
  return report;
}

}  // namespace

VertexFunction vec_gamma(const WeightedGraph& g, const EdgeField& xi,
                         const EdgeField& eta) {
  VertexFunction out = VertexFunction::Zero(g.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [x, y] = g.edges()[e];
    out(x) += g.weight()(x, y) * std::conj(xi(e)) * eta(e);
  }
  for (int x = 0; x < g.size(); ++x) out(x) /= 2.0 * g.measure()(x);
  return out;
}

VertexFunction vec_gamma(const WeightedGraph& g, const EdgeField& xi) {
  return vec_gamma(g, xi, xi);
}

EdgeField jmap(const WeightedGraph& g, const EdgeField& xi) {
  return jmap_column(g, xi);
}

bool HodgeOperator::real() const {
  return matrix.imag().cwiseAbs().maxCoeff() <= 1e-14;
}

HodgeOperator idle_hodge(const WeightedGraph& g) {
  const int ne = g.edge_count();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(ne, ne);
  for (int e = 0; e < ne; ++e) {
    auto [x, y] = g.edges()[e];
    for (int z = 0; z < g.size(); ++z) {
      if (g.weight()(y, z) > 0.0)
        h(e, g.edge_index(y, z)) -= g.weight()(y, z) / g.measure()(y);
      if (g.weight()(x, z) > 0.0)
        h(e, g.edge_index(z, x)) -= g.weight()(x, z) / g.measure()(x);
    }
  }
  HodgeOperator hodge;
  hodge.kind = HodgeOperator::Kind::Idle;
  hodge.matrix = h.cast<std::complex<double>>();
  hodge = finish_hodge(g, std::move(hodge));
  if (!hodge.certified)
    throw std::logic_error("idle Hodge operator failed certification");
  return hodge;
}

HodgeOperator splitting_hodge(const WeightedGraph& g, double K) {
  const Eigen::MatrixXd& d = g.gradient_matrix();
  const Eigen::MatrixXd w = g.edge_half_weight().asDiagonal();
  const Eigen::MatrixXd gram = d.transpose() * w * d;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const double cut = 1e-12 * std::max(1.0, es.eigenvalues().maxCoeff());
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(es.eigenvalues().size());
  for (int i = 0; i < inv.size(); ++i)
    if (es.eigenvalues()(i) > cut) inv(i) = 1.0 / es.eigenvalues()(i);
  const Eigen::MatrixXd gram_pinv =
      es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();

  const Eigen::MatrixXd dplus = gram_pinv * d.transpose() * w;
  const Eigen::MatrixXd proj = d * dplus;
  const Eigen::MatrixXd h =
      d * g.laplacian() * dplus +
      2.0 * K * (Eigen::MatrixXd::Identity(proj.rows(), proj.cols()) - proj);

  HodgeOperator hodge;
  hodge.kind = HodgeOperator::Kind::Splitting;
  hodge.splitting_level = K;
  hodge.matrix = h.cast<std::complex<double>>();
  hodge = finish_hodge(g, std::move(hodge));
  if (!hodge.certified)
    throw std::logic_error("splitting Hodge operator failed certification");
  return hodge;
}

HodgeOperator custom_hodge(const WeightedGraph& g, const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() != g.edge_count() || matrix.cols() != g.edge_count())
    throw std::invalid_argument("custom Hodge matrix must be directed-edge indexed");
  HodgeOperator hodge;
  hodge.kind = HodgeOperator::Kind::Custom;
  hodge.matrix = matrix;
  return finish_hodge(g, std::move(hodge));
}

CurvatureReport bakry_emery_curvature(const WeightedGraph& g, double truncation) {
  CurvatureReport report;
  report.kind = "bakry_emery";
  report.mode = "exact_pencil";
  report.truncation = truncation;
  report.bound = kInf;
  int best = -1;
  Eigen::VectorXd best_witness;
  for (int x = 0; x < g.size(); ++x) {
    auto sol = pencil_min_eig(gamma2_form(g, x), gamma_form(g, x), truncation);
    double value = kInf;
    if (sol) {
      value = sol->value;
      if (value < report.bound) {
        best = x;
        best_witness = sol->witness;
      }
    }
    report.per_site.emplace_back(g.label(x), value);
    report.bound = std::min(report.bound, value);
  }
  if (best >= 0) {
    CurvatureWitness w;
    w.site = g.label(best);
    w.space = "vertices";
    for (int i = 0; i < best_witness.size(); ++i) w.vector.emplace_back(best_witness(i), 0.0);
    report.witness = w;
  }
  return report;
}

namespace {

CurvatureReport intertwining_impl(const WeightedGraph& g, const HodgeOperator& hodge,
                                  double truncation, bool force_complex) {
  if (!hodge.certified)
    throw std::invalid_argument("Hodge operator is not certified");
  const Eigen::MatrixXcd& h = hodge.matrix;
  const bool real_path = !force_complex && hodge.real();

  auto left_form = [&](int x) -> Eigen::MatrixXcd {
    const Eigen::VectorXd vx = vec_gamma_weights(g, x);
    Eigen::MatrixXcd lv = Eigen::MatrixXcd::Zero(g.edge_count(), g.edge_count());
    for (int y = 0; y < g.size(); ++y) {
      const double lxy = g.laplacian()(x, y);
      if (lxy != 0.0)
        lv += lxy * vec_gamma_weights(g, y).cast<std::complex<double>>().asDiagonal().toDenseMatrix();
    }
    const Eigen::MatrixXcd vxd = vx.cast<std::complex<double>>().asDiagonal();
    return 0.5 * (h.adjoint() * vxd + vxd * h - lv);
  };
  auto right = [&](int x) { return vec_gamma_weights(g, x); };

  CurvatureReport report = per_vertex_pencil_report(
      g, "intertwining", left_form, right, real_path, truncation, "edges");
  report.metadata["hodge"] =
      hodge.kind == HodgeOperator::Kind::Idle       ? "idle"
      : hodge.kind == HodgeOperator::Kind::Splitting ? "splitting"
                                                      : "custom";
  if (hodge.kind == HodgeOperator::Kind::Splitting)
    report.metadata["splitting_level"] = hodge.splitting_level;
  report.metadata["field"] = real_path ? "real" : "complex";
  report.metadata["intertwine_residual"] = hodge.intertwine_residual;
  report.metadata["jcommute_residual"] = hodge.jcommute_residual;
  return report;
}

}  // namespace

CurvatureReport intertwining_curvature(const WeightedGraph& g, const HodgeOperator& hodge,
                                       double truncation) {
  return intertwining_impl(g, hodge, truncation, false);
}

CurvatureReport intertwining_curvature_complex(const WeightedGraph& g,
                                               const HodgeOperator& hodge,
                                               double truncation) {
  return intertwining_impl(g, hodge, truncation, true);
}

double universal_bound(const WeightedGraph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("universal bound requires at least one edge");
  for (int x = 0; x < g.size(); ++x) {
    if (g.degree(x) > 1.0 + 1e-12)
      throw std::invalid_argument("degree condition deg <= 1 fails at vertex '" +
                                  g.label(x) + "'");
  }
  double pmin = kInf;
  for (const auto& [x, y] : g.edges()) pmin = std::min(pmin, g.transition(x, y));
  return -1.5 - 1.0 / pmin;
}

}  // namespace curvlab
