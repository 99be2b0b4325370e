#pragma once

#include <string>
#include <vector>

namespace homcalc {

/// Outcome of a validation or identity check: empty means everything held.
struct Report {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string what) { violations.push_back(std::move(what)); }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& v : other.violations)
      violations.push_back(prefix.empty() ? v : prefix + ": " + v);
  }
};

}  // namespace homcalc
