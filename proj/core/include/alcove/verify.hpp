#pragma once

// Re-derivation suite: every closed-form rule in the library is replayed
// against generator closures and interval searches over a finite window, and
// disagreements are collected rather than thrown.

#include <string>

#include "alcove/oracle.hpp"
#include "alcove/sections.hpp"

namespace alcove {

struct VerifyConfig {
  std::string type_spec = "A1";
  long long p = 5;
  std::vector<std::vector<int>> levi_subsets; // empty: every subset of the simples
  long long box_radius = 0;                   // 0: default 3p; must be >= p
  long long max_d = 3;                        // depth ceiling for word checks
  unsigned long long seed = 2024;             // for sampled quadratic checks
  long long sample_cap = 4000;                // max sampled pairs/characters per check
};

struct CheckResult {
  std::string name;
  long long instances = 0;
  std::vector<std::string> failures;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  unsigned long long seed = 0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.failures.empty()) return false;
    return true;
  }
};

VerifyReport verify_suite(const VerifyConfig& cfg);

} // namespace alcove
