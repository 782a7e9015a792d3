#pragma once

#include <array>
#include <functional>
#include <utility>

#include "fresnel/kernels.hpp"

namespace fresnel {

/// Orders and cut-offs of the piecewise approximation together with the
/// coefficient tables for each branch:
///
///   taylor     on [0, x1]
///   trapezoid  on (x1, x2)
///   asymptotic on [x2, inf)
///
/// Immutable after construction.
class HybridPlan {
 public:
  /// Builds the tables for the given parameters. Only structural
  /// constraints are checked here (orders in range, 0 < x1 < x2,
  /// 0 < eps < 1); use satisfies_bounds() for the accuracy invariants.
  static HybridPlan from_parameters(double eps, int n_taylor, int n_trap, int n_asym, double x1,
                                    double x2);

  double eps() const { return eps_; }
  int n_taylor() const { return taylor_.order; }
  int n_trap() const { return trap_.order; }
  int n_asym() const { return asym_.order; }
  double x1() const { return x1_; }
  double x2() const { return x2_; }

  const kernels::TaylorCoefficients& taylor_coeffs() const { return taylor_; }
  const kernels::TrapCoefficients& trap_coeffs() const { return trap_; }
  const kernels::AsymCoefficients& asym_coeffs() const { return asym_; }

  /// {taylor_bound(x1, N1), trap_bound(N2), asym_bound(x2, N3)}
  const std::array<double, 3>& achieved() const { return achieved_; }

  /// True when every entry of achieved() is <= eps.
  bool satisfies_bounds() const;

  friend bool operator==(const HybridPlan& a, const HybridPlan& b);

 private:
  HybridPlan() = default;

  double eps_ = 0.0;
  double x1_ = 0.0;
  double x2_ = 0.0;
  kernels::TaylorCoefficients taylor_;
  kernels::TrapCoefficients trap_;
  kernels::AsymCoefficients asym_;
  std::array<double, 3> achieved_{};
};

/// Maps the trapezoid order N2 to (N1, N3).
using CostBalanceRule = std::function<std::pair<int, int>(int n_trap)>;

/// N3 = N2 and N1 = ceil(7 N2 / 6); yields (14, 12) at N2 = 12.
std::pair<int, int> default_cost_balance(int n_trap);

inline constexpr double kMinPlanEps = 0x1p-75;
inline constexpr double kMaxPlanEps = 1e-2;

/// The double-precision plan: (N1, N2, N3) = (14, 12, 12), x1 = 0.688,
/// x2 = 6.725, eps = 2^-52. Returned as a shared constant.
const HybridPlan& default_double_plan();

/// Builds a plan meeting `eps` on every branch. Throws std::domain_error
/// unless kMinPlanEps <= eps <= kMaxPlanEps.
///
/// Below about 2^-52 the plan's bounds are met by the formulas but the
/// double-precision kernels cannot deliver the accuracy.
HybridPlan plan(double eps, const CostBalanceRule& rule = default_cost_balance);

/// Smallest N >= 1 with trap_bound(N) <= eps.
int min_trap_order(double eps);

/// Largest x (rounded down to 3 decimals) with taylor_bound(x, N) <= eps.
double solve_x1(int order, double eps);

/// Smallest x (rounded up to 3 decimals) with asym_bound(x, N) <= eps.
double solve_x2(int order, double eps);

}  // namespace fresnel
