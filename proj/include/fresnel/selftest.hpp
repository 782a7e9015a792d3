#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fresnel/planner.hpp"

namespace fresnel {

struct SuiteResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;  // worst observed discrepancy (0 for exact checks)
  int samples = 0;
  int violations = 0;
  std::string detail;
};

struct SelfTestReport {
  std::vector<SuiteResult> suites;

  bool all_passed() const {
    for (const auto& s : suites) {
      if (!s.passed) return false;
    }
    return true;
  }
};

struct SelfTestOptions {
  int samples = 100;  // random points per suite (per subinterval where applicable)
  std::uint64_t seed = 0x5eed'f7e5'9e11ULL;
};

/// Runs the oracle self-check followed by the accuracy and property
/// suites against `plan`. Oracle failures to converge are reported as
/// failed suites, not thrown.
SelfTestReport run_selftest(const HybridPlan& plan, const SelfTestOptions& options = {});

/// Distance from |v| to the next representable double above it.
double ulp_of(double v);

}  // namespace fresnel
