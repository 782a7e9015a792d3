#pragma once

// The three approximants of G(x) = C(x) + iS(x) and their error bounds.
//
//   taylor   T_N(x) = sum_{k=0..N} (i pi)^k x^(2k+1) / (2^k (2k+1) k!)
//   trap     G_N(x), modified trapezoid rule with exponentially decaying weights
//   asym     Q_N(x) = (1+i)/2 + exp(i pi x^2/2) sum_{k=0..N} (2k-1)!! (-i)^(k+1) / (pi^(k+1) x^(2k+1))
//
// Everything here is a pure function of its arguments. Coefficient tables
// are immutable once built and may be shared between threads.

#include <vector>

#include "fresnel/complex_value.hpp"

namespace fresnel::kernels {

/// Coefficients (i pi)^k / (2^k (2k+1) k!) for k = 0..order.
struct TaylorCoefficients {
  int order = 0;
  std::vector<ComplexValue> coeffs;
};

/// Coefficients (2k-1)!! (-i)^(k+1) / pi^(k+1) for k = 0..order, with (-1)!! = 1.
struct AsymCoefficients {
  int order = 0;
  std::vector<ComplexValue> coeffs;
};

/// Constants of the modified trapezoid rule of order N.
///
/// `weights[k-1]` = exp(-pi (k-1/2)^2 / A_N^2) and
/// `denoms[k-1]`  = 2 (k-1/2)^2 / A_N^2 for k = 1..N.
struct TrapCoefficients {
  int order = 0;
  double a_n = 0.0;   // sqrt(N + 1/2)
  double beta = 0.0;  // 1 - 1/sqrt(2) - (2 sqrt(2) + 1)/16
  double c_n = 0.0;
  std::vector<double> weights;
  std::vector<double> denoms;
};

TaylorCoefficients taylor_coefficients(int order);
AsymCoefficients asym_coefficients(int order);
TrapCoefficients trap_constants(int order);

/// x * Horner(coeffs, x^2). Exactly odd in x.
ComplexValue taylor_eval(double x, const TaylorCoefficients& tc);

/// Sum of the first two omitted Taylor terms in magnitude. Throws
/// std::domain_error for x < 0 or N < 0.
double taylor_bound(double x, int order);

/// Modified trapezoid sum. Requires x > 0 and pi A_N x < ln(DBL_MAX).
ComplexValue trap_eval(double x, const TrapCoefficients& tc);

/// x-independent bound 2 sqrt(2) c_N exp(-pi N) / (2N + 1).
double trap_bound(int order);

/// Requires x > 0.
ComplexValue asym_eval(double x, const AsymCoefficients& ac);

/// (2N-1)!! / (pi^(N+1) x^(2N+1)).
double asym_bound(double x, int order);

/// m!! for odd m >= -1, (-1)!! = 1. Returned as a double; overflows to
/// +inf for m beyond ~300.
double double_factorial(int m);

/// exp(i pi x^2 / 2) with the phase reduced exactly, so the result stays
/// accurate for |x| up to the largest finite double.
ComplexValue unit_phase(double x);

/// The constant (1 + i)/2, the limit of G(x) as x -> +inf.
inline constexpr ComplexValue kLimitAtInfinity{0.5, 0.5};

}  // namespace fresnel::kernels
