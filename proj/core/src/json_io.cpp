#include "curvlab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace curvlab {

namespace {

double require_number(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number()) throw std::invalid_argument(where + ": expected a number");
  return j.get<double>();
}

std::complex<double> parse_complex(const nlohmann::json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument(where + ": expected [re, im]");
  return {require_number(j[0], where), require_number(j[1], where)};
}

}  // namespace

WeightedGraph parse_graph(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph: expected an object");
  GraphSpec spec;
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("graph.vertices: expected an array of labels");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw std::invalid_argument("graph.vertices: labels must be strings");
    spec.vertices.push_back(v.get<std::string>());
  }
  if (!j.contains("m") || !j["m"].is_object())
    throw std::invalid_argument("graph.m: expected an object vertex -> measure");
  for (const auto& [key, value] : j["m"].items())
    spec.m[key] = require_number(value, "graph.m['" + key + "']");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("graph.edges: expected an array of [u, v, w]");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
      throw std::invalid_argument("graph.edges: entries must be [u, v, w]");
    spec.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>(),
                            require_number(e[2], "graph.edges weight"));
  }
  return WeightedGraph::build(spec);
}

MappingRep parse_mapping(const WeightedGraph& g, const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("mapping: expected an object");
  if (!j.contains("maps") || !j["maps"].is_array())
    throw std::invalid_argument("mapping.maps: expected an array of vertex maps");
  MappingRepSpec spec;
  for (const auto& m : j["maps"]) {
    if (!m.is_object())
      throw std::invalid_argument("mapping.maps: each map is an object vertex -> vertex");
    std::vector<int> map(g.size(), -1);
    for (const auto& [from, to] : m.items()) {
      if (!to.is_string())
        throw std::invalid_argument("mapping.maps: images must be vertex labels");
      map[g.index_of(from)] = g.index_of(to.get<std::string>());
    }
    for (int x = 0; x < g.size(); ++x) {
      if (map[x] < 0)
        throw std::invalid_argument("mapping.maps: map is not total (vertex '" +
                                    g.label(x) + "' missing)");
    }
    spec.maps.push_back(std::move(map));
  }
  spec.rates = Eigen::MatrixXd::Zero(g.size(), static_cast<int>(spec.maps.size()));
  if (!j.contains("c") || !j["c"].is_array())
    throw std::invalid_argument("mapping.c: expected an array of [vertex, map_index, rate]");
  for (const auto& c : j["c"]) {
    if (!c.is_array() || c.size() != 3 || !c[0].is_string())
      throw std::invalid_argument("mapping.c: entries must be [vertex, map_index, rate]");
    const int x = g.index_of(c[0].get<std::string>());
    const int k = c[1].get<int>();
    if (k < 0 || k >= static_cast<int>(spec.maps.size()))
      throw std::invalid_argument("mapping.c: map index out of range");
    spec.rates(x, k) = require_number(c[2], "mapping.c rate");
  }
  if (!j.contains("inverse") || !j["inverse"].is_array())
    throw std::invalid_argument("mapping.inverse: expected an array of map indices");
  for (const auto& inv : j["inverse"]) spec.inverse.push_back(inv.get<int>());
  return MappingRep::build(g, spec);
}

Matx parse_complex_matrix(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix: expected a nonempty row-major array");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Matx m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (int k = 0; k < cols; ++k) m(i, k) = parse_complex(j[i][k], "matrix entry");
  }
  return m;
}

nlohmann::json complex_matrix_to_json(const Matx& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(nlohmann::json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

QmsGenerator parse_qms(const nlohmann::json& j, bool orthogonalize) {
  if (!j.is_object()) throw std::invalid_argument("qms: expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("qms.n: expected an integer dimension");
  const int n = j["n"].get<int>();
  Matx sigma;
  if (j.contains("sigma")) sigma = parse_complex_matrix(j["sigma"]);
  if (!j.contains("jumps") || !j["jumps"].is_array() || j["jumps"].empty())
    throw std::invalid_argument("qms.jumps: expected a nonempty array");
  std::vector<Matx> jumps;
  std::vector<double> omegas;
  for (const auto& jump : j["jumps"]) {
    if (!jump.is_object() || !jump.contains("v"))
      throw std::invalid_argument("qms.jumps: entries must be {\"v\": matrix, \"omega\": number}");
    Matx v = parse_complex_matrix(jump["v"]);
    if (v.rows() != n || v.cols() != n)
      throw std::invalid_argument("qms.jumps: jump dimension mismatch");
    jumps.push_back(std::move(v));
    omegas.push_back(jump.value("omega", 0.0));
  }
  return QmsGenerator::build(jumps, omegas, sigma, orthogonalize);
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + err.what());
  }
  return j;
}

}  // namespace curvlab
