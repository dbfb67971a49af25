#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace qorb {

// One verified identity inside a command run; `tag` is the stable identifier
// cited when the identity fails.
struct CheckResult {
  std::string tag;
  std::string description;
  long trials = 0;
  bool pass = true;
  std::string detail;  // failure specifics or skip notes
};

// Full command report.  `extra` holds command-specific result keys and is
// merged into the top level of the emitted object; reserved keys (schema,
// command, seed, checks, status) always win.
struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  nlohmann::json extra = nlohmann::json::object();

  bool all_pass() const;
  nlohmann::json to_json() const;
};

}  // namespace qorb
