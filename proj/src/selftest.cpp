#include "fresnel/selftest.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fresnel/evaluator.hpp"
#include "fresnel/kernels.hpp"
#include "fresnel/oracle.hpp"

namespace fresnel {

namespace {

constexpr double kMaxAbsError = 1e-15;
constexpr double kMaxMeanError = 5e-16;
constexpr double kTrapSlack = 1e-16;
constexpr int kUlpSlack = 4;

double error_vs_oracle(const ExtendedComplex& exact, ComplexValue approx) {
  return std::hypot((exact.re - ExtendedReal{approx.re}).to_double(),
                    (exact.im - ExtendedReal{approx.im}).to_double());
}

bool bit_equal(ComplexValue a, ComplexValue b) {
  return std::bit_cast<std::uint64_t>(a.re) == std::bit_cast<std::uint64_t>(b.re) &&
         std::bit_cast<std::uint64_t>(a.im) == std::bit_cast<std::uint64_t>(b.im);
}

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string name) { result_.name = std::move(name); }

  void record(double error, double tolerance) {
    ++result_.samples;
    result_.max_error = std::max(result_.max_error, error);
    if (!(error <= tolerance)) ++result_.violations;
  }

  void observe(double error) { result_.max_error = std::max(result_.max_error, error); }

  void check(bool ok) {
    ++result_.samples;
    if (!ok) ++result_.violations;
  }

  void fail(std::string detail) {
    ++result_.violations;
    result_.detail = std::move(detail);
  }

  SuiteResult finish(std::string detail = {}) {
    result_.passed = result_.violations == 0;
    if (result_.detail.empty()) result_.detail = std::move(detail);
    return result_;
  }

 private:
  SuiteResult result_;
};

// Runs a suite body, turning oracle or kernel exceptions into a failed suite.
SuiteResult guarded(const std::string& name, const std::function<SuiteResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    SuiteResult r;
    r.name = name;
    r.passed = false;
    r.violations = 1;
    r.detail = std::string("exception: ") + e.what();
    return r;
  }
}

std::vector<double> uniform_samples(std::mt19937_64& rng, double lo, double hi, int n) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (double& x : xs) x = dist(rng);
  return xs;
}

std::vector<double> log_uniform_samples(std::mt19937_64& rng, double lo, double hi, int n) {
  std::uniform_real_distribution<double> dist(std::log(lo), std::log(hi));
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (double& x : xs) x = std::exp(dist(rng));
  return xs;
}

}  // namespace

double ulp_of(double v) {
  const double a = std::fabs(v);
  return std::nextafter(a, std::numeric_limits<double>::infinity()) - a;
}

SelfTestReport run_selftest(const HybridPlan& plan, const SelfTestOptions& options) {
  SelfTestReport report;
  std::mt19937_64 rng(options.seed);
  const int n = options.samples;
  char buf[160];

  try {
    for (const auto& c : oracle::oracle_selfcheck().checks) {
      report.suites.push_back({"oracle: " + c.name, c.passed, c.value, 1, c.passed ? 0 : 1, {}});
    }
  } catch (const std::exception& e) {
    report.suites.push_back({"oracle self-check", false, 0.0, 0, 1, std::string("exception: ") + e.what()});
  }

  report.suites.push_back(guarded("taylor bound validity", [&] {
    SuiteBuilder s("taylor bound validity (N in {6,10,14}, x in [0,1])");
    const kernels::TaylorCoefficients tables[] = {kernels::taylor_coefficients(6),
                                                  kernels::taylor_coefficients(10),
                                                  kernels::taylor_coefficients(14)};
    for (double x : uniform_samples(rng, 0.0, 1.0, n)) {
      const ExtendedComplex exact = oracle::oracle_g(x);
      for (const auto& tc : tables) {
        const ComplexValue t = kernels::taylor_eval(x, tc);
        s.record(error_vs_oracle(exact, t), kernels::taylor_bound(x, tc.order) + kUlpSlack * ulp_of(abs(t)));
      }
    }
    return s.finish();
  }));

  report.suites.push_back(guarded("trapezoid bound validity", [&] {
    std::snprintf(buf, sizeof buf, "trapezoid bound validity (N=%d, x in (%g, %g))", plan.n_trap(), plan.x1(),
                  plan.x2());
    SuiteBuilder s(buf);
    const double bound = kernels::trap_bound(plan.n_trap()) + kTrapSlack;
    for (double x : uniform_samples(rng, plan.x1(), plan.x2(), n)) {
      if (x <= plan.x1()) continue;
      s.record(error_vs_oracle(oracle::oracle_g(x), kernels::trap_eval(x, plan.trap_coeffs())), bound);
    }
    return s.finish();
  }));

  report.suites.push_back(guarded("asymptotic bound validity", [&] {
    SuiteBuilder s("asymptotic bound validity (N in {4,8,12}, x in [4,100])");
    const kernels::AsymCoefficients tables[] = {kernels::asym_coefficients(4), kernels::asym_coefficients(8),
                                                kernels::asym_coefficients(12)};
    for (double x : uniform_samples(rng, 4.0, 100.0, n)) {
      const ExtendedComplex exact = oracle::oracle_g(x);
      for (const auto& ac : tables) {
        const ComplexValue q = kernels::asym_eval(x, ac);
        s.record(error_vs_oracle(exact, q), kernels::asym_bound(x, ac.order) + kUlpSlack * ulp_of(abs(q)));
      }
    }
    return s.finish();
  }));

  // Plan-level checks share one oracle pass per subinterval.
  struct Interval {
    const char* name;
    double lo;
    double hi;
  };
  const Interval intervals[] = {{"[0, x1]", 0.0, plan.x1()},
                                {"(x1, x2)", plan.x1(), plan.x2()},
                                {"[x2, 15]", plan.x2(), std::max(15.0, plan.x2() + 1.0)}};
  SuiteBuilder plan_bounds("plan branch bounds within eps");
  for (const auto& iv : intervals) {
    report.suites.push_back(guarded(std::string("global accuracy ") + iv.name, [&] {
      SuiteBuilder s(std::string("global accuracy on ") + iv.name);
      double total = 0.0;
      int count = 0;
      for (double x : uniform_samples(rng, iv.lo, iv.hi, n)) {
        const ComplexValue g = fresnel_g(x, plan).value;
        const double err = error_vs_oracle(oracle::oracle_g(x), g);
        s.record(err, kMaxAbsError);
        total += err;
        ++count;
        const double bound = active_bound(x, plan);
        plan_bounds.check(bound <= plan.eps() && err <= plan.eps() + kUlpSlack * ulp_of(abs(g)));
        plan_bounds.observe(err);
      }
      const double mean = count ? total / count : 0.0;
      std::snprintf(buf, sizeof buf, "mean %.3g (limit %.3g)", mean, kMaxMeanError);
      if (!(mean <= kMaxMeanError)) s.fail(buf);
      return s.finish(buf);
    }));
  }
  report.suites.push_back(plan_bounds.finish());

  report.suites.push_back(guarded("exact oddness", [&] {
    SuiteBuilder s("exact oddness G(-x) == -G(x) bitwise");
    std::vector<double> xs = uniform_samples(rng, 0.0, 20.0, n);
    const auto far = log_uniform_samples(rng, 20.0, 1e12, n);
    xs.insert(xs.end(), far.begin(), far.end());
    xs.insert(xs.end(), {0.0, plan.x1(), plan.x2()});
    for (double x : xs) s.check(bit_equal(fresnel_g(-x, plan).value, -fresnel_g(x, plan).value));
    return s.finish();
  }));

  report.suites.push_back(guarded("branch continuity", [&] {
    SuiteBuilder s("branch continuity at x1, x2 (1 ulp steps)");
    const double inf = std::numeric_limits<double>::infinity();
    for (double c : {plan.x1(), plan.x2()}) {
      const ComplexValue at = fresnel_g(c, plan).value;
      for (double nb : {std::nextafter(c, inf), std::nextafter(c, -inf)}) {
        s.record(abs(fresnel_g(nb, plan).value - at), kMaxAbsError);
      }
    }
    return s.finish();
  }));

  report.suites.push_back(guarded("branch dispatch", [&] {
    SuiteBuilder s("branch dispatch at cut-off neighbours");
    const double inf = std::numeric_limits<double>::infinity();
    const double x1 = plan.x1();
    const double x2 = plan.x2();
    const std::pair<double, Branch> cases[] = {
        {std::nextafter(x1, -inf), Branch::taylor},    {x1, Branch::taylor},
        {std::nextafter(x1, inf), Branch::trapezoid},  {std::nextafter(x2, -inf), Branch::trapezoid},
        {x2, Branch::asymptotic},                      {std::nextafter(x2, inf), Branch::asymptotic}};
    for (const auto& [x, expected] : cases) {
      s.check(fresnel_g(x, plan).tag.branch == expected && fresnel_g(-x, plan).tag.branch == expected);
    }
    return s.finish();
  }));

  report.suites.push_back(guarded("asymptotic envelope", [&] {
    SuiteBuilder s("envelope |G(x) - (1+i)/2| <= 2/(pi x) for x >= x2");
    for (double x : log_uniform_samples(rng, plan.x2(), 1e9, n)) {
      const double d = abs(fresnel_g(x, plan).value - kernels::kLimitAtInfinity);
      s.record(d * x, 2.0 / std::numbers::pi);
    }
    return s.finish();
  }));

  report.suites.push_back(guarded("planner properties", [&] {
    SuiteBuilder s("planner monotonicity and safe cut-off rounding");
    const double eps_list[] = {1e-4, 1e-8, 1e-12, 0x1p-52};  // decreasing
    int prev_trap = 0;
    double prev_x1 = std::numeric_limits<double>::infinity();
    double prev_x2 = 0.0;
    for (double eps : eps_list) {
      const HybridPlan p = fresnel::plan(eps);
      s.check(p.satisfies_bounds());
      s.check(p.n_trap() >= prev_trap);
      prev_trap = p.n_trap();
      const double x1 = solve_x1(14, eps);
      const double x2 = solve_x2(12, eps);
      s.check(x1 <= prev_x1 && x2 >= prev_x2);
      s.check(kernels::taylor_bound(x1, 14) <= eps && kernels::asym_bound(x2, 12) <= eps);
      prev_x1 = x1;
      prev_x2 = x2;
    }
    return s.finish();
  }));

  return report;
}

}  // namespace fresnel
