#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace opetokit {

struct Violation {
  std::string law;     // short law name, e.g. "substitution law", "pentagon"
  std::string detail;  // witness tuple or offending ids
};

// Result of a law checker. Problems are collected rather than thrown.
struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  std::size_t arity_bound = 0;  // 0 when the checked structure has no bound

  bool ok() const { return violations.empty(); }

  void add(std::string law, std::string detail) {
    violations.push_back({std::move(law), std::move(detail)});
  }

  std::size_t count(std::string_view law) const {
    std::size_t n = 0;
    for (const auto& v : violations) {
      if (v.law == law) ++n;
    }
    return n;
  }

  void merge(const ValidationReport& other, std::string_view prefix = {}) {
    for (const auto& v : other.violations) {
      violations.push_back(
          {v.law, prefix.empty() ? v.detail
                                 : std::string(prefix) + ": " + v.detail});
    }
  }
};

}  // namespace opetokit
