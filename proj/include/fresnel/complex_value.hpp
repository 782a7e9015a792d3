#pragma once

#include <cmath>
#include <complex>

namespace fresnel {

/// A complex number in working precision. `re` carries C(x), `im` carries S(x).
struct ComplexValue {
  double re = 0.0;
  double im = 0.0;

  friend constexpr bool operator==(const ComplexValue&, const ComplexValue&) = default;

  constexpr ComplexValue operator-() const { return {-re, -im}; }

  [[nodiscard]] std::complex<double> to_std() const { return {re, im}; }
};

constexpr ComplexValue operator+(ComplexValue a, ComplexValue b) {
  return {a.re + b.re, a.im + b.im};
}

constexpr ComplexValue operator-(ComplexValue a, ComplexValue b) {
  return {a.re - b.re, a.im - b.im};
}

constexpr ComplexValue operator*(ComplexValue a, ComplexValue b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

constexpr ComplexValue operator*(ComplexValue a, double s) { return {a.re * s, a.im * s}; }
constexpr ComplexValue operator*(double s, ComplexValue a) { return {a.re * s, a.im * s}; }

inline double abs(ComplexValue z) { return std::hypot(z.re, z.im); }

}  // namespace fresnel
