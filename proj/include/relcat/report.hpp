#pragma once

#include <cstddef>
#include <deque>
#include <string>

namespace relcat {

/// One verified law: pass/fail with the first failing witness, plus how
/// many instances were actually evaluated (skipped instances are those a
/// partial override table cannot resolve).
struct CheckResult {
  std::string law;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::string witness;
};

struct Report {
  // deque: rows are added while references to earlier rows are live
  std::deque<CheckResult> results;

  CheckResult& add(const std::string& law) {
    results.push_back(CheckResult{law});
    return results.back();
  }
  void merge(const Report& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
  }
  bool all_passed() const {
    for (const auto& r : results)
      if (!r.passed) return false;
    return true;
  }
  std::string to_string() const;
};

}  // namespace relcat
