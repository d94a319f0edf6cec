#pragma once

#include <map>
#include <string>

#include "opetokit/report.hpp"

namespace opetokit::detail {

// Keeps the first few witnesses of each law and notes how many were dropped.
class Collector {
 public:
  static constexpr std::size_t kMaxWitnesses = 64;

  explicit Collector(ValidationReport& r) : r_(r) {}
  ~Collector() { finish(); }
  Collector(const Collector&) = delete;
  Collector& operator=(const Collector&) = delete;

  void add(const std::string& law, std::string detail) {
    auto& n = seen_[law];
    ++n;
    if (n <= kMaxWitnesses) r_.add(law, std::move(detail));
  }

  void finish() {
    for (auto& [law, n] : seen_) {
      if (n > kMaxWitnesses) {
        r_.notes.push_back(law + ": " + std::to_string(n) +
                           " violations, first " +
                           std::to_string(kMaxWitnesses) + " listed");
      }
    }
    seen_.clear();
  }

 private:
  ValidationReport& r_;
  std::map<std::string, std::size_t> seen_;
};

}  // namespace opetokit::detail
