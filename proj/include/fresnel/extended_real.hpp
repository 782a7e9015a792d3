#pragma once

// Double-word ("double-double") arithmetic: a real stored as the
// unevaluated sum hi + lo with |lo| <= ulp(hi)/2, good for about 31
// significant digits. Used only by the reference oracle.

#include <cmath>
#include <string>
#include <string_view>
#include <tuple>

#include "fresnel/detail/eft.hpp"

namespace fresnel {

struct ExtendedReal {
  double hi = 0.0;
  double lo = 0.0;

  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double h) : hi(h) {}  // NOLINT(google-explicit-constructor)
  constexpr ExtendedReal(double h, double l) : hi(h), lo(l) {}

  /// Normalizes an arbitrary pair so that |lo| <= ulp(hi)/2.
  static ExtendedReal from_sum(double a, double b) {
    const auto [s, e] = detail::two_sum(a, b);
    return {s, e};
  }

  [[nodiscard]] double to_double() const { return hi + lo; }

  ExtendedReal operator-() const { return {-hi, -lo}; }
};

inline ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
  auto [s, e] = detail::two_sum(a.hi, b.hi);
  auto [t, f] = detail::two_sum(a.lo, b.lo);
  e += t;
  std::tie(s, e) = detail::quick_two_sum(s, e);
  e += f;
  std::tie(s, e) = detail::quick_two_sum(s, e);
  return {s, e};
}

inline ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) { return a + (-b); }

inline ExtendedReal operator*(const ExtendedReal& a, const ExtendedReal& b) {
  auto [p, e] = detail::two_prod(a.hi, b.hi);
  e += a.hi * b.lo + a.lo * b.hi;
  std::tie(p, e) = detail::quick_two_sum(p, e);
  return {p, e};
}

inline ExtendedReal operator*(const ExtendedReal& a, double b) {
  auto [p, e] = detail::two_prod(a.hi, b);
  e += a.lo * b;
  std::tie(p, e) = detail::quick_two_sum(p, e);
  return {p, e};
}

inline ExtendedReal operator/(const ExtendedReal& a, const ExtendedReal& b) {
  const double q1 = a.hi / b.hi;
  ExtendedReal r = a - b * q1;
  const double q2 = r.hi / b.hi;
  r = r - b * q2;
  const double q3 = r.hi / b.hi;
  const auto [s, e] = detail::quick_two_sum(q1, q2);
  return ExtendedReal{s, e} + ExtendedReal{q3};
}

inline ExtendedReal& operator+=(ExtendedReal& a, const ExtendedReal& b) { return a = a + b; }
inline ExtendedReal& operator-=(ExtendedReal& a, const ExtendedReal& b) { return a = a - b; }
inline ExtendedReal& operator*=(ExtendedReal& a, const ExtendedReal& b) { return a = a * b; }

inline bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
  return a.hi == b.hi && a.lo == b.lo;
}
inline bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}

inline ExtendedReal abs(const ExtendedReal& a) { return std::signbit(a.hi) ? -a : a; }

enum class DdOp { add, sub, mul, div };

/// Dispatching form of the four operations. Throws std::domain_error on
/// division by zero; overflow shows up as a non-finite hi.
ExtendedReal dd_arith(const ExtendedReal& a, const ExtendedReal& b, DdOp op);

/// pi to double-double precision.
inline constexpr ExtendedReal kPiDd{3.141592653589793116e+00, 1.224646799147353207e-16};

/// Decimal string with `digits` significant digits in scientific notation
/// (e.g. "7.79893400376822829474206413653e-01").
std::string to_string(const ExtendedReal& v, int digits = 30);

/// Parses a plain or scientific decimal string. Throws
/// std::invalid_argument on malformed input.
ExtendedReal parse_extended(std::string_view text);

struct ExtendedComplex {
  ExtendedReal re;
  ExtendedReal im;

  ExtendedComplex operator-() const { return {-re, -im}; }
};

inline ExtendedComplex operator+(const ExtendedComplex& a, const ExtendedComplex& b) {
  return {a.re + b.re, a.im + b.im};
}
inline ExtendedComplex operator-(const ExtendedComplex& a, const ExtendedComplex& b) {
  return {a.re - b.re, a.im - b.im};
}
inline ExtendedComplex operator*(const ExtendedComplex& a, const ExtendedComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ExtendedComplex operator*(const ExtendedComplex& a, const ExtendedReal& s) {
  return {a.re * s, a.im * s};
}

/// (cos(pi r), sin(pi r)) for |r| <= 1, to double-double accuracy.
ExtendedComplex cis_pi(const ExtendedReal& r);

/// exp(i pi t^2 / 2) for a double-double t.
ExtendedComplex unit_phase(const ExtendedReal& t);

/// Largest of the component-wise absolute differences, as a double.
double max_abs_diff(const ExtendedComplex& a, const ExtendedComplex& b);

}  // namespace fresnel
