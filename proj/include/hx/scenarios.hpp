#pragma once

// Named, reproducible verification scenarios producing Reports.

#include "hx/cache.hpp"
#include "hx/rational.hpp"
#include "hx/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hx {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ScenarioParams {
  std::optional<int> radius, margin, samples, n;
  std::vector<Rational> q;
  std::uint64_t seed = 1;
  std::optional<std::string> group;
  std::vector<int> exponents, torsion;
};

struct ScenarioInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> flags;  // accepted besides --seed
};

const std::vector<ScenarioInfo>& scenario_catalog();

// Throws UsageError for unknown scenarios and invalid or inapplicable parameters.
Report run_scenario(const std::string& name, const ScenarioParams& params, const Cache& cache);

}  // namespace hx
