#pragma once

#include <string>
#include <vector>

namespace cech {

/// One named assertion in a verification report.
struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

inline bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace cech
