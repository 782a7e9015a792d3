#include "fresnel/planner.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fresnel {

namespace {

constexpr double kCutoffScale = 1000.0;  // cut-offs are kept to 3 decimals
constexpr double kBisectionRelTol = 1e-12;
constexpr int kMaxTrapOrder = 200;

void require_plan_eps(double eps) {
  if (!(eps >= kMinPlanEps && eps <= kMaxPlanEps)) {
    throw std::domain_error("eps must lie in [2^-75, 1e-2], got " + std::to_string(eps));
  }
}

}  // namespace

HybridPlan HybridPlan::from_parameters(double eps, int n_taylor, int n_trap, int n_asym, double x1,
                                       double x2) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("plan eps must lie in (0, 1)");
  if (!(std::isfinite(x1) && std::isfinite(x2) && x1 > 0.0 && x2 > x1)) {
    throw std::domain_error("plan cut-offs must satisfy 0 < x1 < x2");
  }
  HybridPlan p;
  p.eps_ = eps;
  p.x1_ = x1;
  p.x2_ = x2;
  p.taylor_ = kernels::taylor_coefficients(n_taylor);
  p.trap_ = kernels::trap_constants(n_trap);
  p.asym_ = kernels::asym_coefficients(n_asym);
  p.achieved_ = {kernels::taylor_bound(x1, n_taylor), kernels::trap_bound(n_trap),
                 kernels::asym_bound(x2, n_asym)};
  return p;
}

bool HybridPlan::satisfies_bounds() const {
  for (double b : achieved_) {
    if (!(b <= eps_)) return false;
  }
  return true;
}

bool operator==(const HybridPlan& a, const HybridPlan& b) {
  auto same_trap = [](const kernels::TrapCoefficients& l, const kernels::TrapCoefficients& r) {
    return l.order == r.order && l.a_n == r.a_n && l.beta == r.beta && l.c_n == r.c_n &&
           l.weights == r.weights && l.denoms == r.denoms;
  };
  return a.eps_ == b.eps_ && a.x1_ == b.x1_ && a.x2_ == b.x2_ &&
         a.taylor_.order == b.taylor_.order && a.taylor_.coeffs == b.taylor_.coeffs &&
         a.asym_.order == b.asym_.order && a.asym_.coeffs == b.asym_.coeffs &&
         same_trap(a.trap_, b.trap_) && a.achieved_ == b.achieved_;
}

std::pair<int, int> default_cost_balance(int n_trap) {
  const int n_taylor = (7 * n_trap + 5) / 6;
  return {n_taylor, n_trap};
}

const HybridPlan& default_double_plan() {
  static const HybridPlan kPlan = HybridPlan::from_parameters(0x1p-52, 14, 12, 12, 0.688, 6.725);
  return kPlan;
}

int min_trap_order(double eps) {
  if (!(eps > 0.0)) throw std::domain_error("min_trap_order: eps must be > 0");
  for (int n = 1; n <= kMaxTrapOrder; ++n) {
    if (kernels::trap_bound(n) <= eps) return n;
  }
  throw std::domain_error("min_trap_order: no order up to " + std::to_string(kMaxTrapOrder) +
                          " reaches eps");
}

double solve_x1(int order, double eps) {
  if (!(eps > 0.0)) throw std::domain_error("solve_x1: eps must be > 0");
  // taylor_bound is increasing in x: lo stays admissible, hi does not.
  double lo = 0.0;
  double hi = 1.0;
  while (kernels::taylor_bound(hi, order) <= eps) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > kBisectionRelTol * hi) {
    const double mid = 0.5 * (lo + hi);
    (kernels::taylor_bound(mid, order) <= eps ? lo : hi) = mid;
  }
  auto steps = std::floor(lo * kCutoffScale);
  while (steps > 0.0 && kernels::taylor_bound(steps / kCutoffScale, order) > eps) steps -= 1.0;
  // Crossing below 0.001: keep the unrounded admissible point.
  return steps > 0.0 ? steps / kCutoffScale : lo;
}

double solve_x2(int order, double eps) {
  if (!(eps > 0.0)) throw std::domain_error("solve_x2: eps must be > 0");
  // asym_bound is decreasing in x: hi stays admissible, lo does not.
  double lo = 1.0;
  double hi = 1.0;
  while (kernels::asym_bound(hi, order) > eps) {
    lo = hi;
    hi *= 2.0;
  }
  while (kernels::asym_bound(lo, order) <= eps) lo *= 0.5;
  while (hi - lo > kBisectionRelTol * hi) {
    const double mid = 0.5 * (lo + hi);
    (kernels::asym_bound(mid, order) <= eps ? hi : lo) = mid;
  }
  auto steps = std::ceil(hi * kCutoffScale);
  while (kernels::asym_bound(steps / kCutoffScale, order) > eps) steps += 1.0;
  return steps / kCutoffScale;
}

HybridPlan plan(double eps, const CostBalanceRule& rule) {
  require_plan_eps(eps);
  const int n_trap = min_trap_order(eps);
  const auto [n_taylor, n_asym] = rule(n_trap);
  const double x1 = solve_x1(n_taylor, eps);
  const double x2 = solve_x2(n_asym, eps);
  if (!(x1 < x2)) {
    throw std::logic_error("plan: cut-offs do not bracket (x1 = " + std::to_string(x1) +
                           ", x2 = " + std::to_string(x2) + ")");
  }
  HybridPlan p = HybridPlan::from_parameters(eps, n_taylor, n_trap, n_asym, x1, x2);
  if (!p.satisfies_bounds()) throw std::logic_error("plan: bound invariant violated");
  return p;
}

}  // namespace fresnel
