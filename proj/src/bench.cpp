#include "fresnel/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <vector>

namespace fresnel {

namespace {

double time_pass(const std::vector<double>& xs, const HybridPlan& plan, double& sink) {
  const auto start = std::chrono::steady_clock::now();
  double acc = 0.0;
  for (double x : xs) {
    const ComplexValue g = fresnel_g(x, plan).value;
    acc += g.re + g.im;
  }
  const auto stop = std::chrono::steady_clock::now();
  sink += acc;
  return std::chrono::duration<double, std::nano>(stop - start).count() / static_cast<double>(xs.size());
}

}  // namespace

double BenchReport::ratio() const {
  double lo = timings[0].ns_per_eval;
  double hi = lo;
  for (const auto& t : timings) {
    lo = std::min(lo, t.ns_per_eval);
    hi = std::max(hi, t.ns_per_eval);
  }
  return hi / lo;
}

BenchReport run_bench(const HybridPlan& plan, const BenchOptions& options) {
  if (options.evals < 1 || options.repetitions < 1) {
    throw std::domain_error("bench: evals and repetitions must be positive");
  }
  BenchReport report;
  report.evals = options.evals;
  report.repetitions = options.repetitions;
  report.timings = {BranchTiming{Branch::taylor, 0.0, plan.x1()},
                    BranchTiming{Branch::trapezoid, plan.x1(), plan.x2()},
                    BranchTiming{Branch::asymptotic, plan.x2(), std::max(15.0, plan.x2() + 1.0)}};

  std::mt19937_64 rng(options.seed);
  volatile double guard = 0.0;
  for (auto& timing : report.timings) {
    std::uniform_real_distribution<double> dist(timing.lo, timing.hi);
    std::vector<double> xs(static_cast<std::size_t>(options.evals));
    for (double& x : xs) {
      do {
        x = dist(rng);
      } while (select_branch(x, plan) != timing.branch);
    }

    double sink = 0.0;
    time_pass(xs, plan, sink);  // warm-up
    std::vector<double> samples;
    for (int r = 0; r < options.repetitions; ++r) samples.push_back(time_pass(xs, plan, sink));
    std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
    timing.ns_per_eval = samples[samples.size() / 2];
    guard = guard + sink;
  }
  return report;
}

}  // namespace fresnel
