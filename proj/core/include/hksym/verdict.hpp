#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hksym {

/// Pass/fail with the first failure described.
struct Verdict {
  bool ok = true;
  std::string detail;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

struct Check {
  std::string name;
  Verdict verdict;
};

/// Ordered list of named checks.
struct CheckList {
  std::vector<Check> checks;

  void add(std::string name, Verdict v) { checks.push_back({std::move(name), std::move(v)}); }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.verdict.ok) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.verdict.ok) return &c;
    return nullptr;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace hksym
