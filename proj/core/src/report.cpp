#include "curvlab/report.hpp"

#include <cmath>

namespace curvlab {

nlohmann::json complex_to_json(const std::complex<double>& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json complex_vector_to_json(const std::vector<std::complex<double>>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& z : v) arr.push_back(complex_to_json(z));
  return arr;
}

nlohmann::json bound_to_json(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

nlohmann::json to_json(const CurvatureReport& report) {
  nlohmann::json j;
  j["schema"] = "curvlab/1";
  j["kind"] = report.kind;
  j["bound"] = bound_to_json(report.bound);
  if (report.restricted_bound) j["restricted_bound"] = bound_to_json(*report.restricted_bound);
  if (!report.per_site.empty()) {
    nlohmann::json sites = nlohmann::json::object();
    for (const auto& [site, value] : report.per_site) sites[site] = bound_to_json(value);
    j["per_site"] = sites;
  }
  j["mode"] = report.mode;
  if (report.mode == "sampled") {
    j["samples"] = report.samples;
    j["seed"] = report.seed;
  }
  j["truncation"] = report.truncation;
  if (report.witness) {
    nlohmann::json w;
    w["site"] = report.witness->site;
    w["space"] = report.witness->space;
    w["vector"] = complex_vector_to_json(report.witness->vector);
    if (!report.witness->state.empty())
      w["state"] = complex_vector_to_json(report.witness->state);
    j["witness"] = w;
  }
  if (!report.metadata.is_null()) j["metadata"] = report.metadata;
  return j;
}

}  // namespace curvlab
