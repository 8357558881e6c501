#pragma once

#include <functional>
#include <string>
#include <vector>

#include "blb/check.hpp"

namespace blb {

// Built-in regression suites reproducing the worked examples; each check in
// a report is prefixed by the scenario name.
struct Scenario {
  std::string name;
  std::string summary;
  std::function<CheckReport()> run;
};

const std::vector<Scenario>& scenarios();
// Throws InputError for an unknown name.
CheckReport run_scenario(const std::string& name);

}  // namespace blb
