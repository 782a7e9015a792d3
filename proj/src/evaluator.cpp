#include "fresnel/evaluator.hpp"

#include <cmath>
#include <stdexcept>

namespace fresnel {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::taylor: return "taylor";
    case Branch::trapezoid: return "trapezoid";
    case Branch::asymptotic: return "asymptotic";
  }
  return "unknown";
}

Branch select_branch(double abs_x, const HybridPlan& plan) {
  if (abs_x <= plan.x1()) return Branch::taylor;
  if (abs_x < plan.x2()) return Branch::trapezoid;
  return Branch::asymptotic;
}

FresnelResult fresnel_g(double x, const HybridPlan& plan) {
  if (std::isnan(x)) throw std::invalid_argument("fresnel_g: x is NaN");
  if (std::isinf(x)) throw std::domain_error("fresnel_g: x is infinite");

  const bool negated = std::signbit(x);
  const double ax = std::fabs(x);
  const Branch branch = select_branch(ax, plan);

  ComplexValue g;
  switch (branch) {
    case Branch::taylor: g = kernels::taylor_eval(ax, plan.taylor_coeffs()); break;
    case Branch::trapezoid: g = kernels::trap_eval(ax, plan.trap_coeffs()); break;
    case Branch::asymptotic: g = kernels::asym_eval(ax, plan.asym_coeffs()); break;
  }
  return {negated ? -g : g, {branch, negated}};
}

double fresnel_c(double x, const HybridPlan& plan) { return fresnel_g(x, plan).value.re; }

double fresnel_s(double x, const HybridPlan& plan) { return fresnel_g(x, plan).value.im; }

double active_bound(double abs_x, const HybridPlan& plan) {
  switch (select_branch(abs_x, plan)) {
    case Branch::taylor: return kernels::taylor_bound(abs_x, plan.n_taylor());
    case Branch::trapezoid: return plan.achieved()[1];
    case Branch::asymptotic: return kernels::asym_bound(abs_x, plan.n_asym());
  }
  return 0.0;
}

std::vector<ClothoidPoint> clothoid_sample(double s0, double s1, int n, const HybridPlan& plan) {
  if (!(std::isfinite(s0) && std::isfinite(s1) && s0 < s1)) {
    throw std::domain_error("clothoid_sample: need finite s0 < s1");
  }
  if (n < 2) throw std::domain_error("clothoid_sample: need n >= 2");

  std::vector<ClothoidPoint> points;
  points.reserve(static_cast<std::size_t>(n));
  const double span = s1 - s0;
  for (int k = 0; k < n; ++k) {
    const double s = (k == n - 1) ? s1 : s0 + k * span / (n - 1);
    const ComplexValue g = fresnel_g(s, plan).value;
    points.push_back({s, g.re, g.im});
  }
  return points;
}

}  // namespace fresnel
