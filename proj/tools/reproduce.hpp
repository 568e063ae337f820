#ifndef CURVLAB_REPRODUCE_HPP
#define CURVLAB_REPRODUCE_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace curvlab::cli {

struct ReproduceCase {
  std::string name;
  std::string description;
  nlohmann::json (*run)();  // returns {expected, computed, pass, ...}
};

const std::vector<ReproduceCase>& reproduce_cases();

}  // namespace curvlab::cli

#endif
