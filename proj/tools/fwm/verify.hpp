#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fwm::cli {

struct Check {
  std::string module;
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

// Runs every module invariant with fixed seeds; one line per check goes to `log` as it finishes.
std::vector<Check> run_verify(std::ostream& log);

}  // namespace fwm::cli
