#include "curvlab/mapping.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "curvlab/pencil.hpp"
#include "curvlab/rng.hpp"

namespace curvlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

MappingRep MappingRep::build(const WeightedGraph& g, const MappingRepSpec& spec) {
  const int n = g.size();
  const int nm = static_cast<int>(spec.maps.size());
  if (nm == 0) throw std::invalid_argument("mapping representation has no maps");
  if (spec.rates.rows() != n || spec.rates.cols() != nm)
    throw std::invalid_argument("rate matrix must be vertices x maps");
  if (static_cast<int>(spec.inverse.size()) != nm)
    throw std::invalid_argument("inverse list must have one entry per map");
  for (int k = 0; k < nm; ++k) {
    if (static_cast<int>(spec.maps[k].size()) != n)
      throw std::invalid_argument("maps must be total functions on the vertex set");
    for (int x = 0; x < n; ++x) {
      if (spec.maps[k][x] < 0 || spec.maps[k][x] >= n)
        throw std::invalid_argument("map image out of range");
    }
    if (spec.inverse[k] < 0 || spec.inverse[k] >= nm)
      throw std::invalid_argument("inverse index out of range");
  }
  if ((spec.rates.array() < 0.0).any())
    throw std::invalid_argument("rates must be nonnegative");

  MappingRep mr(g);
  mr.maps_ = spec.maps;
  mr.rates_ = spec.rates;
  mr.inverse_ = spec.inverse;

  // Property (b): delta^{-1}(delta(x)) = x whenever c(x,delta) > 0, and the
  // reverse cell stays active (needed for J and detailed balance).
  for (int k = 0; k < nm; ++k) {
    const int ki = spec.inverse[k];
    for (int x = 0; x < n; ++x) {
      if (spec.rates(x, k) <= 0.0) continue;
      const int y = spec.maps[k][x];
      if (spec.maps[ki][y] != x)
        throw std::invalid_argument(
            "property (b) violated: inverse map does not invert map " +
            std::to_string(k) + " at vertex '" + g.label(x) + "'");
      if (spec.rates(y, ki) <= 0.0)
        throw std::invalid_argument(
            "property (b) violated: reverse cell inactive for map " +
            std::to_string(k) + " at vertex '" + g.label(x) + "'");
    }
  }

  // Property (a): the represented operator agrees with the graph Laplacian.
  Eigen::MatrixXd rep = Eigen::MatrixXd::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < nm; ++k) {
      const double c = spec.rates(x, k);
      if (c <= 0.0) continue;
      rep(x, x) += c;
      rep(x, spec.maps[k][x]) -= c;
    }
  }
  if ((rep - g.laplacian()).cwiseAbs().maxCoeff() >
      1e-12 * std::max(1.0, g.laplacian().cwiseAbs().maxCoeff()))
    throw std::invalid_argument(
        "property (a) violated: maps and rates do not represent the Laplacian");

  // Induced edge weights must match the graph.
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < nm; ++k)
      if (spec.rates(x, k) > 0.0) b(x, spec.maps[k][x]) += spec.rates(x, k) * g.measure()(x);
  if ((b - g.weight()).cwiseAbs().maxCoeff() >
      1e-10 * std::max(1.0, g.weight().cwiseAbs().maxCoeff()))
    throw std::invalid_argument(
        "induced edge weights are inconsistent with the graph");

  // Property (c): detailed balance on random test functions.
  Rng rng(0x6d617070);
  for (int trial = 0; trial < 20; ++trial) {
    double lhs = 0.0, rhs = 0.0;
    Eigen::MatrixXd f(n, nm);
    for (int x = 0; x < n; ++x)
      for (int k = 0; k < nm; ++k) f(x, k) = rng.normal();
    for (int x = 0; x < n; ++x) {
      for (int k = 0; k < nm; ++k) {
        const double w = spec.rates(x, k) * g.measure()(x);
        if (w <= 0.0) continue;
        lhs += f(x, k) * w;
        rhs += f(spec.maps[k][x], spec.inverse[k]) * w;
      }
    }
    if (std::abs(lhs - rhs) > 1e-10 * std::max(1.0, std::abs(lhs)))
      throw std::invalid_argument("property (c) violated: detailed balance fails");
  }

  mr.cell_lookup_ = Eigen::MatrixXi::Constant(n, nm, -1);
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < nm; ++k) {
      if (spec.rates(x, k) > 0.0) {
        mr.cell_lookup_(x, k) = static_cast<int>(mr.cells_.size());
        mr.cells_.emplace_back(x, k);
      }
    }
  }
  const int nc = static_cast<int>(mr.cells_.size());
  mr.half_weight_.resize(nc);
  mr.nabla_ = Eigen::MatrixXd::Zero(nc, n);
  for (int c = 0; c < nc; ++c) {
    auto [x, k] = mr.cells_[c];
    mr.half_weight_(c) = 0.5 * spec.rates(x, k) * g.measure()(x);
    mr.nabla_(c, x) += 1.0;
    mr.nabla_(c, spec.maps[k][x]) -= 1.0;
  }
  return mr;
}

int MappingRep::cell_index(int x, int k) const { return cell_lookup_(x, k); }

MappingConditions check_conditions(const MappingRep& mr) {
  MappingConditions cond;
  const int n = mr.graph().size();
  const int nm = mr.map_count();
  cond.commuting = true;
  for (int k = 0; k < nm && cond.commuting; ++k)
    for (int l = 0; l < nm && cond.commuting; ++l)
      for (int x = 0; x < n; ++x)
        if (mr.apply_map(k, mr.apply_map(l, x)) != mr.apply_map(l, mr.apply_map(k, x))) {
          cond.commuting = false;
          break;
        }
  cond.invariant_rates = true;
  for (int k = 0; k < nm && cond.invariant_rates; ++k)
    for (int l = 0; l < nm && cond.invariant_rates; ++l)
      for (int x = 0; x < n; ++x)
        if (mr.rate(mr.apply_map(k, x), l) != mr.rate(x, l)) {
          cond.invariant_rates = false;
          break;
        }
  cond.involutive = true;
  for (int k = 0; k < nm && cond.involutive; ++k)
    for (int x = 0; x < n; ++x)
      if (mr.apply_map(k, mr.apply_map(k, x)) != x) {
        cond.involutive = false;
        break;
      }
  return cond;
}

Eigen::MatrixXd isometry_matrix(const MappingRep& mr) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(mr.cell_count(), mr.graph().edge_count());
  for (int c = 0; c < mr.cell_count(); ++c) {
    auto [x, k] = mr.cells()[c];
    const int e = mr.graph().edge_index(x, mr.apply_map(k, x));
    if (e >= 0) v(c, e) = 1.0;
  }
  return v;
}

Eigen::VectorXcd mapping_jmap(const MappingRep& mr, const Eigen::VectorXcd& xi) {
  Eigen::VectorXcd out(mr.cell_count());
  for (int c = 0; c < mr.cell_count(); ++c) {
    auto [x, k] = mr.cells()[c];
    const int rc = mr.cell_index(mr.apply_map(k, x), mr.inverse(k));
    out(c) = -std::conj(xi(rc));
  }
  return out;
}

namespace {

std::pair<double, double> mapping_residuals(const MappingRep& mr,
                                            const Eigen::MatrixXd& h) {
  const Eigen::MatrixXd nl = mr.nabla_matrix() * mr.graph().laplacian();
  const double r1 = (h * mr.nabla_matrix() - nl).cwiseAbs().maxCoeff();
  double r2 = 0.0;
  for (int c = 0; c < mr.cell_count(); ++c) {
    Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(mr.cell_count());
    basis(c) = 1.0;
    const Eigen::VectorXcd lhs = h.cast<std::complex<double>>() * mapping_jmap(mr, basis);
    const Eigen::VectorXcd rhs =
        mapping_jmap(mr, Eigen::VectorXcd(h.cast<std::complex<double>>() * basis));
    r2 = std::max(r2, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return {r1, r2};
}

Eigen::VectorXd cell_gamma_weights(const MappingRep& mr, int x) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(mr.cell_count());
  for (int c = 0; c < mr.cell_count(); ++c) {
    auto [y, k] = mr.cells()[c];
    if (y == x) w(c) = 0.5 * mr.rate(x, k);
  }
  return w;
}

CurvatureReport mapping_pencil_report(const MappingRep& mr, const Eigen::MatrixXd& h,
                                      double truncation) {
  const WeightedGraph& g = mr.graph();
  CurvatureReport report;
  report.kind = "intertwining_mapping";
  report.mode = "exact_pencil";
  report.truncation = truncation;
  report.bound = kInf;
  int best = -1;
  Eigen::VectorXd best_witness;
  for (int x = 0; x < g.size(); ++x) {
    const Eigen::VectorXd vx = cell_gamma_weights(mr, x);
    Eigen::MatrixXd lv = Eigen::MatrixXd::Zero(mr.cell_count(), mr.cell_count());
    for (int y = 0; y < g.size(); ++y) {
      const double lxy = g.laplacian()(x, y);
      if (lxy != 0.0) lv += lxy * cell_gamma_weights(mr, y).asDiagonal().toDenseMatrix();
    }
    const Eigen::MatrixXd left =
        0.5 * (h.transpose() * vx.asDiagonal().toDenseMatrix() +
               vx.asDiagonal().toDenseMatrix() * h - lv);
    auto sol = pencil_min_eig(Eigen::MatrixXd(0.5 * (left + left.transpose())),
                              Eigen::MatrixXd(vx.asDiagonal()), truncation);
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
    w.space = "cells";
    for (int i = 0; i < best_witness.size(); ++i) w.vector.emplace_back(best_witness(i), 0.0);
    report.witness = w;
  }
  return report;
}

}  // namespace

MappingHodge mapping_hodge(const MappingRep& mr, MappingHodge::Variant variant,
                           std::optional<double> K) {
  const MappingConditions cond = check_conditions(mr);
  if (!cond.commuting)
    throw std::invalid_argument("mapping Hodge requires condition (a): commuting maps");
  if (!cond.invariant_rates)
    throw std::invalid_argument("mapping Hodge requires condition (b): invariant rates");
  if (variant == MappingHodge::Variant::Involutive && !cond.involutive)
    throw std::invalid_argument("mapping Hodge requires condition (c): involutive maps");

  const int nc = mr.cell_count();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(nc, nc);
  for (int c = 0; c < nc; ++c) {
    auto [x, k] = mr.cells()[c];
    for (int gidx = 0; gidx < mr.map_count(); ++gidx) {
      const double cg = mr.rate(x, gidx);
      if (cg <= 0.0) continue;
      h(c, c) += cg;
      h(c, mr.cell_index(mr.apply_map(gidx, x), k)) -= cg;
    }
  }

  double level = 0.0;
  if (variant == MappingHodge::Variant::Involutive) {
    double cmin = kInf;
    for (auto [x, k] : mr.cells()) cmin = std::min(cmin, mr.rate(x, k));
    level = K.value_or(2.0 * cmin);
    for (int c = 0; c < nc; ++c) {
      auto [x, k] = mr.cells()[c];
      h(c, c) += level;
      h(c, mr.cell_index(mr.apply_map(k, x), k)) += level;
    }
  }

  MappingHodge hodge;
  hodge.variant = variant;
  hodge.level = level;
  hodge.matrix = h;
  auto [r1, r2] = mapping_residuals(mr, h);
  hodge.intertwine_residual = r1;
  hodge.jcommute_residual = r2;
  const double scale =
      std::max(1.0, (mr.nabla_matrix() * mr.graph().laplacian()).cwiseAbs().maxCoeff());
  hodge.certified = r1 <= 1e-10 * scale && r2 <= 1e-10 * std::max(1.0, h.cwiseAbs().maxCoeff());
  if (!hodge.certified)
    throw std::logic_error("mapping Hodge operator failed certification");
  return hodge;
}

CurvatureReport intertwining_curvature_mapping(const MappingRep& mr,
                                               const MappingHodge& hodge,
                                               double truncation) {
  if (!hodge.certified)
    throw std::invalid_argument("mapping Hodge operator is not certified");
  CurvatureReport report = mapping_pencil_report(mr, hodge.matrix, truncation);
  report.metadata["variant"] =
      hodge.variant == MappingHodge::Variant::Commuting ? "commuting" : "involutive";
  if (hodge.variant == MappingHodge::Variant::Involutive)
    report.metadata["level"] = hodge.level;
  return report;
}

CurvatureReport intertwining_curvature_mapping_matrix(const MappingRep& mr,
                                                      const Eigen::MatrixXd& matrix,
                                                      double truncation) {
  auto [r1, r2] = mapping_residuals(mr, matrix);
  const double scale =
      std::max(1.0, (mr.nabla_matrix() * mr.graph().laplacian()).cwiseAbs().maxCoeff());
  if (r1 > 1e-10 * scale || r2 > 1e-10 * std::max(1.0, matrix.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("cell-space operator is not certified");
  return mapping_pencil_report(mr, matrix, truncation);
}

}  // namespace curvlab
