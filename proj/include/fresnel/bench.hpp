#pragma once

#include <array>
#include <cstdint>

#include "fresnel/evaluator.hpp"

namespace fresnel {

struct BenchOptions {
  int evals = 1'000'000;  // evaluations per branch per repetition
  int repetitions = 5;
  std::uint64_t seed = 12345;
};

struct BranchTiming {
  Branch branch = Branch::taylor;
  double lo = 0.0;  // sampled interval
  double hi = 0.0;
  double ns_per_eval = 0.0;  // median over repetitions
};

struct BenchReport {
  std::array<BranchTiming, 3> timings{};
  int evals = 0;
  int repetitions = 0;

  /// max / min of the per-branch ns_per_eval.
  double ratio() const;
};

/// Times fresnel_g on uniform random x inside each branch's subinterval
/// ([0, x1], (x1, x2), [x2, 15]) after one warm-up pass.
BenchReport run_bench(const HybridPlan& plan, const BenchOptions& options = {});

}  // namespace fresnel
