#ifndef CURVLAB_REPORT_HPP
#define CURVLAB_REPORT_HPP

#include <complex>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvlab {

/// Minimizer attached to a curvature report: the site (vertex label, or a
/// description for matrix algebras) plus the minimizing vector, and for
/// sampled quantum pencils the state vector the forms were evaluated at.
struct CurvatureWitness {
  std::string site;
  std::string space;  // what the vector indexes: "vertices", "edges", ...
  std::vector<std::complex<double>> vector;
  std::vector<std::complex<double>> state;  // optional vector-state v
};

/// Result of a curvature computation. `bound` is the headline constant K.
/// In exact_pencil mode per_site holds one entry per vertex (+inf for sites
/// where the right form vanishes) and bound equals their minimum. In sampled
/// mode the bound is the best value over the seeded sample sweep plus local
/// refinement, and samples/seed identify the sweep.
struct CurvatureReport {
  std::string kind;
  double bound = 0.0;
  std::optional<double> restricted_bound;  // Hermitian / J-real restriction
  std::vector<std::pair<std::string, double>> per_site;
  std::string mode = "exact_pencil";  // or "sampled"
  int samples = 0;
  std::uint64_t seed = 0;
  double truncation = 1e-11;
  std::optional<CurvatureWitness> witness;
  nlohmann::json metadata;  // solver details, certification residuals, ...
};

nlohmann::json to_json(const CurvatureReport& report);

nlohmann::json complex_to_json(const std::complex<double>& z);
nlohmann::json complex_vector_to_json(const std::vector<std::complex<double>>& v);

/// JSON value for a possibly infinite bound ("inf" / "-inf" as strings).
nlohmann::json bound_to_json(double value);

}  // namespace curvlab

#endif
