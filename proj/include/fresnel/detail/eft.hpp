#pragma once

// Error-free transformations on doubles.

#include <cmath>
#include <utility>

namespace fresnel::detail {

/// s + e == a + b exactly, s = fl(a + b).
inline std::pair<double, double> two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

/// Requires |a| >= |b| (or a == 0).
inline std::pair<double, double> quick_two_sum(double a, double b) {
  const double s = a + b;
  const double e = b - (s - a);
  return {s, e};
}

/// p + e == a * b exactly, p = fl(a * b), barring over/underflow.
inline std::pair<double, double> two_prod(double a, double b) {
#if defined(__FMA__) || defined(__ARM_FEATURE_FMA)
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
#else
  // Dekker splitting.
  constexpr double kSplitter = 134217729.0;  // 2^27 + 1
  const double p = a * b;
  double t = kSplitter * a;
  const double a_hi = t - (t - a);
  const double a_lo = a - a_hi;
  t = kSplitter * b;
  const double b_hi = t - (t - b);
  const double b_lo = b - b_hi;
  const double e = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo;
  return {p, e};
#endif
}

}  // namespace fresnel::detail
