#pragma once

#include <string_view>
#include <vector>

#include "fresnel/complex_value.hpp"
#include "fresnel/planner.hpp"

namespace fresnel {

enum class Branch { taylor, trapezoid, asymptotic };

std::string_view to_string(Branch b);

/// Which approximant produced a value, and whether the parity sign flip
/// was applied (x < 0, including -0.0).
struct BranchTag {
  Branch branch = Branch::taylor;
  bool negated = false;

  friend bool operator==(const BranchTag&, const BranchTag&) = default;
};

struct FresnelResult {
  ComplexValue value;
  BranchTag tag;
};

/// Branch selected for |x| under `plan`: [0, x1] taylor, (x1, x2) trapezoid,
/// [x2, inf) asymptotic.
Branch select_branch(double abs_x, const HybridPlan& plan);

/// G(x) = C(x) + i S(x) for finite x. Throws std::invalid_argument for NaN
/// and std::domain_error for +-inf (the limits are +-(1+i)/2).
FresnelResult fresnel_g(double x, const HybridPlan& plan = default_double_plan());

double fresnel_c(double x, const HybridPlan& plan = default_double_plan());
double fresnel_s(double x, const HybridPlan& plan = default_double_plan());

/// Error bound of the branch that handles |x|.
double active_bound(double abs_x, const HybridPlan& plan);

struct ClothoidPoint {
  double s = 0.0;
  double c = 0.0;
  double sv = 0.0;
};

/// n points (C(s), S(s)) at uniform spacing on [s0, s1], both ends included
/// exactly. Requires finite s0 < s1 and n >= 2.
std::vector<ClothoidPoint> clothoid_sample(double s0, double s1, int n,
                                           const HybridPlan& plan = default_double_plan());

}  // namespace fresnel
