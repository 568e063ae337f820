#ifndef CURVLAB_JSON_IO_HPP
#define CURVLAB_JSON_IO_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "curvlab/graph.hpp"
#include "curvlab/mapping.hpp"
#include "curvlab/qms.hpp"

namespace curvlab {

/// Graph schema: {"vertices": [string], "m": {vertex: number},
/// "edges": [[vertex, vertex, number]]}. Edges are undirected and duplicates
/// are an error.
WeightedGraph parse_graph(const nlohmann::json& j);

/// Mapping-representation schema: {"maps": [{vertex: vertex}],
/// "c": [[vertex, map_index, rate]], "inverse": [map_index]}. Unlisted
/// (vertex, map) rates are zero.
MappingRep parse_mapping(const WeightedGraph& g, const nlohmann::json& j);

/// Generator schema: {"n": int, "sigma": [[[re,im],...],...] (optional),
/// "jumps": [{"v": [[[re,im],...],...], "omega": number}]}. Matrices are
/// row-major, complex entries are [re, im] pairs.
QmsGenerator parse_qms(const nlohmann::json& j, bool orthogonalize = false);

Matx parse_complex_matrix(const nlohmann::json& j);
nlohmann::json complex_matrix_to_json(const Matx& m);

nlohmann::json load_json_file(const std::string& path);

}  // namespace curvlab

#endif
