#include "reproduce.hpp"

#include <cmath>
#include <limits>

#include "curvlab/graph_curvature.hpp"
#include "curvlab/graph_ge.hpp"
#include "curvlab/instances.hpp"
#include "curvlab/qms.hpp"
#include "curvlab/qms_curvature.hpp"
#include "curvlab/rng.hpp"

namespace curvlab::cli {

namespace {

using nlohmann::json;
using namespace curvlab;

json bakry_emery_complete_n5() {
  Rng rng(103);
  Eigen::VectorXd m(5);
  for (int i = 0; i < 5; ++i) m(i) = 0.1 + rng.uniform();
  m /= m.sum();
  const double expected = 0.5 + m.minCoeff();
  const double computed = bakry_emery_curvature(make_complete_graph(m)).bound;
  return {{"expected", expected},
          {"computed", computed},
          {"pass", std::abs(computed - expected) <= 1e-8}};
}

json complete_graph_n4() {
  const WeightedGraph g = make_uniform_complete_graph(4);
  const double computed = intertwining_curvature(g, splitting_hodge(g, 0.75)).bound;
  return {{"expected", 0.75},
          {"computed", computed},
          {"pass", std::abs(computed - 0.75) <= 1e-8}};
}

json two_point_03() {
  const double exact = two_point_entropic_exact(0.3);
  GeSearchConfig cfg;
  cfg.samples = 10000;
  cfg.seed = 11;
  const double searched =
      ge_curvature_search(make_two_point(0.3), builtin_mean("logarithmic"), cfg).bound;
  const double be = bakry_emery_curvature(make_two_point(0.3)).bound;
  const bool pass = std::abs(searched - exact) <= 1e-3 &&
                    exact >= 0.5 + std::sqrt(0.21) - 1e-8 &&
                    std::abs(be - 0.8) <= 1e-10;
  return {{"expected", {{"exact_floor", 0.5 + std::sqrt(0.21)}, {"be", 0.8}}},
          {"computed", {{"exact", exact}, {"search", searched}, {"be", be}}},
          {"pass", pass}};
}

json universal_bound_p3() {
  const WeightedGraph p3 = make_path3();
  const double bound = universal_bound(p3);
  const double curvature = intertwining_curvature(p3, idle_hodge(p3)).bound;
  const bool pass = std::abs(bound + 5.5) <= 1e-12 && curvature >= bound - 1e-8;
  return {{"expected", -5.5},
          {"computed", {{"universal", bound}, {"idle_curvature", curvature}}},
          {"pass", pass}};
}

json hypercube_d2() {
  const MappingRep cube = make_hypercube(2, 1.0);
  const MappingHodge hodge = mapping_hodge(cube, MappingHodge::Variant::Involutive, 2.0);
  const double computed = intertwining_curvature_mapping(cube, hodge).bound;
  return {{"expected", 2.0},
          {"computed", computed},
          {"pass", std::abs(computed - 2.0) <= 1e-8}};
}

json cycle_z5() {
  const MappingRep cycle = make_cycle(5, 1.0);
  const MappingHodge hodge = mapping_hodge(cycle, MappingHodge::Variant::Commuting);
  const double computed = intertwining_curvature_mapping(cycle, hodge).bound;
  return {{"expected", ">= 0"}, {"computed", computed}, {"pass", computed >= -1e-9}};
}

json three_vertex_gap() {
  const WeightedGraph g = make_three_vertex(0.01);
  const double be = bakry_emery_curvature(g).bound;
  GeSearchConfig cfg;
  cfg.samples = 2048;
  cfg.seed = 7;
  const double searched =
      ge_curvature_search(g, builtin_mean("logarithmic"), cfg).bound;
  const bool pass = be >= 1.0 - 1e-6 && searched < 0.9;
  return {{"expected", {{"be_floor", 1.0}, {"search_ceiling", 0.9}}},
          {"computed", {{"be", be}, {"search", searched}}},
          {"pass", pass}};
}

json depolarizing_n2_intertwining() {
  const QmsGenerator gen = QmsGenerator::depolarizing(2);
  const Fodc fodc(gen);
  const QmsHodge hodge = splitting_hodge_qms(fodc, 5.0 / 6.0);
  QmsCurvatureConfig cfg;
  cfg.samples = 48;
  cfg.steps = 24;
  const double computed = intertwining_curvature_qms(fodc, hodge, cfg).bound;
  return {{"expected", 5.0 / 6.0},
          {"computed", computed},
          {"pass", std::abs(computed - 5.0 / 6.0) <= 1e-6}};
}

json depolarizing_n2_ge() {
  const QmsGenerator gen = QmsGenerator::depolarizing(2);
  const MeanFunction logm = builtin_mean("logarithmic");
  const double inf = ge_derivative_infimum(gen, logm, 2000, 13);
  const bool no_violation =
      !ge_sweep_qms(gen, logm, 1.0, 300, 17, default_time_grid()).has_value();
  return {{"expected", {{"infimum_floor", 1.0 - 1e-3}, {"holds_at", 1.0}}},
          {"computed", {{"infimum", inf}, {"no_violation_at_1", no_violation}}},
          {"pass", inf >= 1.0 - 1e-3 && no_violation}};
}

json depolarizing_gap_m2() {
  const QmsGenerator gen = QmsGenerator::depolarizing(2);
  const Fodc fodc(gen);
  QmsCurvatureConfig cfg;
  cfg.samples = 32;
  cfg.steps = 16;
  double best = -std::numeric_limits<double>::infinity();
  for (double k : {0.6, 0.75, 5.0 / 6.0, 0.9, 1.0}) {
    const QmsHodge hodge = splitting_hodge_qms(fodc, k);
    best = std::max(best, intertwining_curvature_qms(fodc, hodge, cfg).bound);
  }
  const double inf = ge_derivative_infimum(gen, builtin_mean("logarithmic"), 2000, 19);
  const bool pass = best <= 5.0 / 6.0 + 1e-4 && inf >= 1.0 - 1e-3;
  return {{"expected", {{"intertwining_ceiling", 5.0 / 6.0}, {"entropic_floor", 1.0}}},
          {"computed", {{"intertwining_sweep", best}, {"entropic_infimum", inf}}},
          {"pass", pass}};
}

json dephasing_m3() {
  const auto expectation = ConditionalExpectation::blocks(3, {{0, 1}, {2}});
  const double c = pimsner_popa(expectation);
  const QmsGenerator gen = QmsGenerator::dephasing(expectation, Matx::Identity(3, 3));
  QmsCurvatureConfig cfg;
  cfg.samples = 64;
  cfg.steps = 32;
  const double be = be_curvature_qms(gen, cfg).bound;
  const double floor = 0.5 + c / (1.0 + c);
  return {{"expected", {{"index", 0.5}, {"be_floor", floor}}},
          {"computed", {{"index", c}, {"be", be}}},
          {"pass", std::abs(c - 0.5) <= 1e-9 && be >= floor - 1e-4}};
}

json commuting_projections_m4() {
  Matx p = Matx::Zero(2, 2);
  p(0, 0) = 1.0;
  const Matx id2 = Matx::Identity(2, 2);
  auto kron = [](const Matx& a, const Matx& b) {
    Matx out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
  };
  auto family = [](const Matx& proj) {
    JumpFamily f;
    f.ops = {proj - tau(proj) * Matx::Identity(proj.rows(), proj.cols())};
    f.omegas = {0.0};
    return f;
  };
  const QmsGenerator gen = QmsGenerator::commuting_sum(
      {family(kron(p, id2)), family(kron(id2, p))}, Matx::Identity(4, 4));
  const QmsHodge hodge = product_hodge(gen);
  QmsCurvatureConfig cfg;
  cfg.samples = 48;
  cfg.steps = 24;
  const double computed = intertwining_curvature_qms(Fodc(gen), hodge, cfg).bound;
  return {{"expected", ">= 1"},
          {"computed", computed},
          {"pass", computed >= 1.0 - 1e-4}};
}

json pimsner_popa_depolarizing() {
  json computed = json::object();
  bool pass = true;
  for (int n : {2, 3, 4}) {
    const double c = pimsner_popa(ConditionalExpectation::trace(n));
    computed[std::to_string(n)] = c;
    pass = pass && std::abs(c - 1.0 / n) <= 1e-6;
  }
  return {{"expected", "1/n"}, {"computed", computed}, {"pass", pass}};
}

json mlsi_qubit() {
  const QmsGenerator gen = QmsGenerator::depolarizing(2);
  const auto grid = default_time_grid();
  const bool holds = !mlsi_sweep(gen, 2.0, 1000, 23, grid).has_value();
  const auto violation = mlsi_sweep(gen, 2.2, 1000, 29, grid);
  json computed = {{"rate_2_holds", holds}, {"rate_2.2_falsified", violation.has_value()}};
  if (violation) {
    computed["violation"] = {{"t", violation->t}, {"lhs", violation->lhs}, {"rhs", violation->rhs}};
  }
  return {{"expected", {{"rate_2", "holds"}, {"rate_2.2", "falsified"}}},
          {"computed", computed},
          {"pass", holds && violation.has_value()}};
}

}  // namespace

const std::vector<ReproduceCase>& reproduce_cases() {
  static const std::vector<ReproduceCase> cases = {
      {"bakry-emery-complete-n5",
       "Bakry-Emery constant of a weighted complete graph equals 1/2 + min m",
       bakry_emery_complete_n5},
      {"complete-graph-n4",
       "intertwining curvature 1/2 + 1/n of the uniform complete graph on 4 vertices",
       complete_graph_n4},
      {"two-point-0.3",
       "two-point graph at lambda = 0.3: exact entropic value, search, and BE constant",
       two_point_03},
      {"universal-bound-p3",
       "universal bound -3/2 - 1/P_min = -5.5 on the path with m = 4, unit weights",
       universal_bound_p3},
      {"hypercube-d2", "bit-flip representation of the 2-cube: curvature 2 kappa",
       hypercube_d2},
      {"cycle-z5", "shift representation of the 5-cycle: nonnegative curvature",
       cycle_z5},
      {"three-vertex-gap",
       "three-vertex family at eps = 0.01: BE stays >= 1, entropic search below 0.9",
       three_vertex_gap},
      {"depolarizing-n2-intertwining",
       "qubit depolarizing semigroup: intertwining constant 5/6", depolarizing_n2_intertwining},
      {"depolarizing-n2-ge",
       "qubit depolarizing semigroup: gradient estimate at 1/2 + 1/n = 1",
       depolarizing_n2_ge},
      {"depolarizing-gap-m2",
       "qubit depolarizing semigroup: 5/6 intertwining vs 1 entropic", depolarizing_gap_m2},
      {"dephasing-m3",
       "block dephasing on M_3: BE dominates 1/2 + C/(1+C) with the Pimsner-Popa index",
       dephasing_m3},
      {"commuting-projections-m4",
       "two commuting projections with unit rates: curvature at least 1",
       commuting_projections_m4},
      {"pimsner-popa-depolarizing", "Pimsner-Popa index of tau(.)1 equals 1/n",
       pimsner_popa_depolarizing},
      {"mlsi-qubit", "entropy decay at rate 2 holds and rate 2.2 is falsified",
       mlsi_qubit},
  };
  return cases;
}

}  // namespace curvlab::cli
