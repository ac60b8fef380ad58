#pragma once

#include <string>
#include <vector>

namespace sce {

/// One exact identity evaluated at one index.
struct CheckResult {
  std::string identity;
  int n = 0;
  bool passed = false;
};

/// Outcome of a batch of identity checks. Failures are data, not errors.
class Report {
 public:
  void add(std::string identity, int n, bool passed) { results_.push_back({std::move(identity), n, passed}); }
  void append(const Report& other) { results_.insert(results_.end(), other.results_.begin(), other.results_.end()); }

  const std::vector<CheckResult>& results() const { return results_; }
  bool all_passed() const {
    for (const auto& r : results_) {
      if (!r.passed) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t k = 0;
    for (const auto& r : results_) k += r.passed ? 0 : 1;
    return k;
  }

 private:
  std::vector<CheckResult> results_;
};

}  // namespace sce
