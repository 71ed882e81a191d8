#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace amazing {

/// Outcome of one exact identity at one parameter point.
struct Check {
  std::string identity;    // e.g. "right-eigenvector"
  std::string parameters;  // e.g. "n=3 b=2 j=2"
  bool passed = false;
  std::string detail;      // empty on success
};

struct Report {
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
  }
  void add(std::string identity, std::string parameters, bool passed,
           std::string detail = {}) {
    checks.push_back({std::move(identity), std::move(parameters), passed,
                      std::move(detail)});
  }
  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace amazing
