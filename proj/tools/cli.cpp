#include "cli.hpp"

#include <Eigen/Core>
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "curvlab/graph_curvature.hpp"
#include "curvlab/graph_ge.hpp"
#include "curvlab/json_io.hpp"
#include "curvlab/qms.hpp"
#include "curvlab/qms_curvature.hpp"
#include "curvlab/report.hpp"
#include "reproduce.hpp"

namespace curvlab::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::uint64_t seed = 1;
  int samples = 1024;
  double tol = 1e-11;  // pencil truncation
  std::string mean = "logarithmic";
  std::string output = "-";  // "-" means stdout
};

// Parses "idle", "splitting:<K>", "product", "file:<path>" style selectors.
struct HodgeSelector {
  std::string kind;
  double level = 0.0;
  std::string path;
};

HodgeSelector parse_hodge(const std::string& text) {
  HodgeSelector sel;
  const auto colon = text.find(':');
  sel.kind = text.substr(0, colon);
  if (colon != std::string::npos) {
    const std::string rest = text.substr(colon + 1);
    if (sel.kind == "splitting") {
      sel.level = std::stod(rest);
    } else if (sel.kind == "file") {
      sel.path = rest;
    } else if (sel.kind == "involutive") {
      sel.level = std::stod(rest);
    } else {
      throw std::invalid_argument("unrecognized selector '" + text + "'");
    }
  }
  return sel;
}

json violation_to_json(const GeViolation& v) {
  json out;
  out["t"] = v.t;
  out["lhs"] = v.lhs;
  out["rhs"] = v.rhs;
  out["f"] = std::vector<double>(v.f.data(), v.f.data() + v.f.size());
  out["rho"] = std::vector<double>(v.rho.data(), v.rho.data() + v.rho.size());
  return out;
}

json base_report(const std::string& kind) {
  json j;
  j["schema"] = "curvlab/1";
  j["kind"] = kind;
  return j;
}

int emit(const json& report, const RunConfig& cfg, std::string& output) {
  output = report.dump(2) + "\n";
  if (cfg.output != "-") {
    std::ofstream out(cfg.output);
    if (!out) throw std::invalid_argument("cannot write to '" + cfg.output + "'");
    out << output;
    output = "";
  }
  return 0;
}

}  // namespace

CliResult run(const std::vector<std::string>& args) {
  if (const char* threads = std::getenv("CURVLAB_THREADS")) {
    const int count = std::atoi(threads);
    if (count > 0) Eigen::setNbThreads(count);
  }

  CLI::App app{"curvature bounds for finite weighted graphs and GNS-symmetric "
               "quantum Markov semigroups"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "seed for all sampled computations");
  app.add_option("--samples", cfg.samples, "sample budget for sampled computations")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "relative eigenvalue truncation of the pencils")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "output path ('-' for stdout)");

  // graph ------------------------------------------------------------------
  auto* graph_cmd = app.add_subcommand("graph", "weighted-graph curvature");
  graph_cmd->require_subcommand(1);
  graph_cmd->fallthrough();

  std::string graph_file;
  auto* graph_be = graph_cmd->add_subcommand("be", "Bakry-Emery constant");
  graph_be->fallthrough();
  graph_be->add_option("graph", graph_file, "graph JSON file")->required();

  std::string hodge_spec = "idle";
  auto* graph_inter = graph_cmd->add_subcommand("intertwine", "intertwining curvature");
  graph_inter->fallthrough();
  graph_inter->add_option("--hodge", hodge_spec,
                          "idle | splitting:<K> | file:<matrix.json>");
  graph_inter->add_option("graph", graph_file, "graph JSON file")->required();

  std::string ge_mode = "estimate";
  double ge_level = 0.0;
  auto* graph_ge = graph_cmd->add_subcommand("ge", "gradient estimates");
  graph_ge->fallthrough();
  graph_ge->add_option("--mean", cfg.mean, "mean function name");
  graph_ge->add_option("--mode", ge_mode, "estimate | falsify")
      ->check(CLI::IsMember({"estimate", "falsify"}));
  graph_ge->add_option("--K", ge_level, "constant to falsify");
  graph_ge->add_option("graph", graph_file, "graph JSON file")->required();

  std::string mapping_file, variant_spec = "commuting";
  auto* graph_mapping = graph_cmd->add_subcommand("mapping", "mapping-representation curvature");
  graph_mapping->fallthrough();
  graph_mapping->add_option("--variant", variant_spec, "commuting | involutive[:K]");
  graph_mapping->add_option("graph", graph_file, "graph JSON file")->required();
  graph_mapping->add_option("mapping", mapping_file, "mapping JSON file")->required();

  // qms --------------------------------------------------------------------
  auto* qms_cmd = app.add_subcommand("qms", "quantum Markov semigroup curvature");
  qms_cmd->require_subcommand(1);
  qms_cmd->fallthrough();

  std::string qms_file;
  auto* qms_validate = qms_cmd->add_subcommand("validate", "check the jump-form conditions");
  qms_validate->fallthrough();
  qms_validate->add_option("qms", qms_file, "generator JSON file")->required();

  auto* qms_be = qms_cmd->add_subcommand("be", "Loewner-order Bakry-Emery constant");
  qms_be->fallthrough();
  qms_be->add_option("qms", qms_file, "generator JSON file")->required();

  std::string qms_hodge_spec = "splitting:0.5";
  auto* qms_inter = qms_cmd->add_subcommand("intertwine", "intertwining curvature");
  qms_inter->fallthrough();
  qms_inter->add_option("--hodge", qms_hodge_spec,
                        "splitting:<K> | product | file:<matrix.json>");
  qms_inter->add_option("qms", qms_file, "generator JSON file")->required();

  std::string qms_ge_mode = "check";
  double qms_ge_level = 0.0;
  auto* qms_ge = qms_cmd->add_subcommand("ge", "gradient estimate check / estimate");
  qms_ge->fallthrough();
  qms_ge->add_option("--mean", cfg.mean, "mean function name");
  qms_ge->add_option("--K", qms_ge_level, "constant to check");
  qms_ge->add_option("--mode", qms_ge_mode, "check | estimate")
      ->check(CLI::IsMember({"check", "estimate"}));
  qms_ge->add_option("qms", qms_file, "generator JSON file")->required();

  double mlsi_rate = 2.0;
  auto* qms_mlsi = qms_cmd->add_subcommand("mlsi", "relative-entropy decay check");
  qms_mlsi->fallthrough();
  qms_mlsi->add_option("--rate", mlsi_rate, "decay rate 2K")->required();
  qms_mlsi->add_option("qms", qms_file, "generator JSON file")->required();

  // reproduce ----------------------------------------------------------------
  std::string case_name;
  bool list_cases = false;
  auto* reproduce_cmd =
      app.add_subcommand("reproduce", "run a bundled constant-reproduction case");
  reproduce_cmd->fallthrough();
  reproduce_cmd->add_option("case", case_name, "case name (see --list)");
  reproduce_cmd->add_flag("--list", list_cases, "list available cases");

  CliResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream help;
    help << app.help();
    return {0, help.str()};
  } catch (const CLI::ParseError& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  }

  try {
    json report;
    int code = 0;

    if (graph_be->parsed()) {
      const WeightedGraph g = parse_graph(load_json_file(graph_file));
      report = to_json(bakry_emery_curvature(g, cfg.tol));
    } else if (graph_inter->parsed()) {
      const WeightedGraph g = parse_graph(load_json_file(graph_file));
      const HodgeSelector sel = parse_hodge(hodge_spec);
      HodgeOperator hodge;
      if (sel.kind == "idle") {
        hodge = idle_hodge(g);
      } else if (sel.kind == "splitting") {
        hodge = splitting_hodge(g, sel.level);
      } else if (sel.kind == "file") {
        hodge = custom_hodge(g, parse_complex_matrix(load_json_file(sel.path)));
      } else {
        throw std::invalid_argument("unknown Hodge selector '" + sel.kind + "'");
      }
      report = to_json(intertwining_curvature(g, hodge, cfg.tol));
    } else if (graph_ge->parsed()) {
      const WeightedGraph g = parse_graph(load_json_file(graph_file));
      const MeanFunction mean = builtin_mean(cfg.mean);
      if (ge_mode == "estimate") {
        GeSearchConfig scfg;
        scfg.samples = cfg.samples;
        scfg.seed = cfg.seed;
        scfg.truncation = cfg.tol;
        report = to_json(ge_curvature_search(g, mean, scfg));
      } else {
        GeFalsifyConfig fcfg;
        fcfg.samples = cfg.samples;
        fcfg.seed = cfg.seed;
        const auto violation = ge_falsify(g, mean, ge_level, fcfg);
        report = base_report("ge_falsify");
        report["mean"] = cfg.mean;
        report["K"] = ge_level;
        report["samples"] = cfg.samples;
        report["seed"] = cfg.seed;
        report["violation"] = violation ? violation_to_json(*violation) : json(nullptr);
        if (violation) code = 2;
      }
    } else if (graph_mapping->parsed()) {
      const WeightedGraph g = parse_graph(load_json_file(graph_file));
      const MappingRep mr = parse_mapping(g, load_json_file(mapping_file));
      const HodgeSelector sel = parse_hodge(variant_spec);
      MappingHodge hodge;
      if (sel.kind == "commuting") {
        hodge = mapping_hodge(mr, MappingHodge::Variant::Commuting);
      } else if (sel.kind == "involutive") {
        std::optional<double> level;
        if (variant_spec.find(':') != std::string::npos) level = sel.level;
        hodge = mapping_hodge(mr, MappingHodge::Variant::Involutive, level);
      } else {
        throw std::invalid_argument("unknown variant '" + sel.kind + "'");
      }
      report = to_json(intertwining_curvature_mapping(mr, hodge, cfg.tol));
    } else if (qms_validate->parsed()) {
      const QmsGenerator gen = parse_qms(load_json_file(qms_file));
      report = base_report("qms_validate");
      report["n"] = gen.dim();
      report["jumps"] = gen.jump_count();
      report["families"] = gen.family_count();
      report["tracially_symmetric"] = gen.tracially_symmetric();
      report["valid"] = true;
    } else if (qms_be->parsed()) {
      const QmsGenerator gen = parse_qms(load_json_file(qms_file));
      QmsCurvatureConfig qcfg;
      qcfg.samples = cfg.samples;
      qcfg.seed = cfg.seed;
      qcfg.truncation = cfg.tol;
      report = to_json(be_curvature_qms(gen, qcfg));
    } else if (qms_inter->parsed()) {
      const QmsGenerator gen = parse_qms(load_json_file(qms_file));
      const Fodc fodc(gen);
      const HodgeSelector sel = parse_hodge(qms_hodge_spec);
      QmsHodge hodge;
      if (sel.kind == "splitting") {
        hodge = splitting_hodge_qms(fodc, sel.level);
      } else if (sel.kind == "product") {
        hodge = product_hodge(gen);
      } else if (sel.kind == "file") {
        hodge = custom_qms_hodge(fodc, parse_complex_matrix(load_json_file(sel.path)));
      } else {
        throw std::invalid_argument("unknown Hodge selector '" + sel.kind + "'");
      }
      QmsCurvatureConfig qcfg;
      qcfg.samples = cfg.samples;
      qcfg.seed = cfg.seed;
      qcfg.truncation = cfg.tol;
      report = to_json(intertwining_curvature_qms(fodc, hodge, qcfg));
    } else if (qms_ge->parsed()) {
      const QmsGenerator gen = parse_qms(load_json_file(qms_file));
      const MeanFunction mean = builtin_mean(cfg.mean);
      if (qms_ge_mode == "estimate") {
        const double inf = ge_derivative_infimum(gen, mean, cfg.samples, cfg.seed);
        report = base_report("qms_ge_estimate");
        report["mean"] = cfg.mean;
        report["bound"] = inf;
        report["samples"] = cfg.samples;
        report["seed"] = cfg.seed;
      } else {
        const auto violation = ge_sweep_qms(gen, mean, qms_ge_level, cfg.samples,
                                            cfg.seed, default_time_grid());
        report = base_report("qms_ge_check");
        report["mean"] = cfg.mean;
        report["K"] = qms_ge_level;
        report["samples"] = cfg.samples;
        report["seed"] = cfg.seed;
        if (violation) {
          report["violation"] = {{"t", violation->t},
                                 {"lhs", violation->lhs},
                                 {"rhs", violation->rhs},
                                 {"A", complex_matrix_to_json(violation->a)},
                                 {"rho", complex_matrix_to_json(violation->rho)}};
          code = 2;
        } else {
          report["violation"] = nullptr;
        }
      }
    } else if (qms_mlsi->parsed()) {
      const QmsGenerator gen = parse_qms(load_json_file(qms_file));
      const auto violation =
          mlsi_sweep(gen, mlsi_rate, cfg.samples, cfg.seed, default_time_grid());
      report = base_report("mlsi");
      report["rate"] = mlsi_rate;
      report["samples"] = cfg.samples;
      report["seed"] = cfg.seed;
      if (violation) {
        report["violation"] = {{"t", violation->t},
                               {"lhs", violation->lhs},
                               {"rhs", violation->rhs},
                               {"rho0", complex_matrix_to_json(violation->rho0)}};
        code = 2;
      } else {
        report["violation"] = nullptr;
      }
    } else if (reproduce_cmd->parsed()) {
      if (list_cases) {
        report = base_report("reproduce_catalog");
        json cases = json::array();
        for (const auto& c : reproduce_cases())
          cases.push_back({{"name", c.name}, {"description", c.description}});
        report["cases"] = cases;
      } else {
        const ReproduceCase* found = nullptr;
        for (const auto& c : reproduce_cases())
          if (c.name == case_name) found = &c;
        if (!found)
          throw std::invalid_argument("unknown reproduction case '" + case_name +
                                      "' (try reproduce --list)");
        report = base_report("reproduce");
        report["case"] = found->name;
        report["description"] = found->description;
        report.update(found->run());
        if (!report.value("pass", false)) code = 2;
      }
    }

    result.exit_code = code;
    emit(report, cfg, result.output);
    return result;
  } catch (const std::invalid_argument& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {1, std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace curvlab::cli
