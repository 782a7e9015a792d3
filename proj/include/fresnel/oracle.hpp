#pragma once

// High-precision reference values of G(x) = C(x) + i S(x), computed from
// the defining integral in double-double arithmetic (absolute error around
// 1e-25 or better). Independent of the production kernels: no modified
// trapezoid rule and no working-precision arithmetic.

#include <string>
#include <vector>

#include "fresnel/extended_real.hpp"

namespace fresnel::oracle {

inline constexpr double kMaxArgument = 1e12;
inline constexpr double kSeriesLimit = 2.5;       // power series up to here
inline constexpr double kQuadratureLimit = 20.0;  // quadrature up to here, asymptotic beyond

/// G(x) for |x| <= 1e12. Throws std::domain_error for NaN or larger |x|;
/// throws std::runtime_error if a route fails to converge.
ExtendedComplex oracle_g(double x);

/// Power series summed until terms drop below 1e-34. Valid for moderate
/// |x| (cancellation grows like exp(pi x^2 / 2)).
ExtendedComplex series_route(double x);

/// Composite 32-point Gauss-Legendre quadrature of exp(i pi t^2 / 2) over
/// [0, x], panel length min(0.25, 1/|x|), halving panels until two
/// successive results agree to 1e-27.
ExtendedComplex quadrature_route(double x);

/// Large-argument expansion truncated once terms fall below 1e-34 (or at
/// the smallest term). Throws std::runtime_error if the smallest term is
/// above 1e-30.
ExtendedComplex asymptotic_route(double x);

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // measured discrepancy
  double tolerance = 0.0;  // pass iff value <= tolerance
};

struct SelfCheckReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// Route cross-checks at x in {2, 2.5, 3, 18, 20, 25}, a central-difference
/// derivative check of C against cos(pi x^2 / 2), and the x = 1e6 limit.
SelfCheckReport oracle_selfcheck();

}  // namespace fresnel::oracle
