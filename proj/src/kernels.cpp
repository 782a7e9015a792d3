#include "fresnel/kernels.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fresnel/detail/eft.hpp"

namespace fresnel::kernels {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long double kPiLong = 3.141592653589793238462643383279502884L;

void require_order(int order, int min_order, const char* what) {
  if (order < min_order) {
    throw std::domain_error(std::string(what) + ": order " + std::to_string(order) +
                            " below minimum " + std::to_string(min_order));
  }
}

// i^k for the Taylor series, (-i)^(k+1) for the asymptotic series.
ComplexValue rotate_by_i_power(double magnitude, int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {magnitude, 0.0};
    case 1: return {0.0, magnitude};
    case 2: return {-magnitude, 0.0};
    default: return {0.0, -magnitude};
  }
}

void sin_cos(double angle, double& s, double& c) {
#if defined(__GNUC__)
  __builtin_sincos(angle, &s, &c);
#else
  s = std::sin(angle);
  c = std::cos(angle);
#endif
}

// Nearest integer to v (ties to even) for |v| < 2^51, without a libm call.
double round_to_int(double v) {
#if defined(FLT_EVAL_METHOD) && FLT_EVAL_METHOD == 0
  constexpr double kMagic = 0x1.8p52;
  return (v + kMagic) - kMagic;
#else
  return std::nearbyint(v);
#endif
}

// v - 2 round(v / 2), exactly; the result lies in [-1, 1].
double reduce_mod2(double v) {
  const double av = std::fabs(v);
  if (av < 0x1p51) return v - 2.0 * round_to_int(0.5 * v);
  if (av >= 0x1p53) return 0.0;  // v is an even integer
  return std::remainder(v, 2.0);
}

// cos(pi f) + i sin(pi f) for |f| <= 1 + tiny, f = head + tail with head
// an exactly reduced value and |tail| << |head| or head == 0.
ComplexValue cis_pi(double head, double tail) {
  // Split off the nearest multiple of 1/2 so the remaining angle is in [-pi/4, pi/4].
  const double quarter_turns = round_to_int(2.0 * head);
  const double f = (head - 0.5 * quarter_turns) + tail;  // head - q/2 is exact
  double s = 0.0;
  double c = 0.0;
  sin_cos(kPi * f, s, c);
  // Rotate by i^q without a data-dependent branch.
  const double rotated[4] = {c, -s, -c, s};
  const auto q = static_cast<unsigned>(static_cast<int>(quarter_turns)) & 3U;
  return {rotated[q], rotated[(q + 3U) & 3U]};
}

}  // namespace

ComplexValue unit_phase(double x) {
  const double ax = std::fabs(x);
  // Above 2^53 every double is an even integer, so x^2/2 is a multiple of 2.
  if (ax >= 0x1p53) return {1.0, 0.0};
  const auto [sq_hi, sq_lo] = detail::two_prod(ax, ax);
  // x^2/2 = half_hi + half_lo exactly; reduce each part modulo 2.
  const double r_hi = reduce_mod2(0.5 * sq_hi);
  const double r_lo = reduce_mod2(0.5 * sq_lo);
  const auto [head, tail] = detail::two_sum(r_hi, r_lo);
  // |head| <= 1 + tiny here, which cis_pi accepts as is.
  return cis_pi(head, tail);
}

double double_factorial(int m) {
  if (m < -1 || (m % 2 == 0)) {
    throw std::domain_error("double_factorial: argument must be odd and >= -1, got " +
                            std::to_string(m));
  }
  double result = 1.0;
  for (int k = 3; k <= m; k += 2) result *= k;
  return result;
}

TaylorCoefficients taylor_coefficients(int order) {
  require_order(order, 0, "taylor_coefficients");
  TaylorCoefficients tc;
  tc.order = order;
  tc.coeffs.reserve(static_cast<std::size_t>(order) + 1);
  // ratio_k = (pi/2)^k / k!, accumulated in long double to keep each entry
  // within an ulp of the exact value.
  long double ratio = 1.0L;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) ratio *= (kPiLong / 2.0L) / static_cast<long double>(k);
    const auto magnitude = static_cast<double>(ratio / static_cast<long double>(2 * k + 1));
    tc.coeffs.push_back(rotate_by_i_power(magnitude, k));
  }
  return tc;
}

AsymCoefficients asym_coefficients(int order) {
  require_order(order, 0, "asym_coefficients");
  AsymCoefficients ac;
  ac.order = order;
  ac.coeffs.reserve(static_cast<std::size_t>(order) + 1);
  long double magnitude = 1.0L / kPiLong;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) magnitude *= static_cast<long double>(2 * k - 1) / kPiLong;
    // (-i)^(k+1) == i^(3(k+1))
    ac.coeffs.push_back(rotate_by_i_power(static_cast<double>(magnitude), 3 * (k + 1)));
  }
  return ac;
}

TrapCoefficients trap_constants(int order) {
  require_order(order, 1, "trap_constants");
  TrapCoefficients tc;
  tc.order = order;
  tc.a_n = std::sqrt(order + 0.5);
  const double sqrt2 = std::numbers::sqrt2;
  tc.beta = 1.0 - 1.0 / sqrt2 - (2.0 * sqrt2 + 1.0) / 16.0;

  const double a2 = order + 0.5;
  const double e_half_pi = std::exp(-kPi / 2.0);
  const double first = 20.0 * sqrt2 * e_half_pi / (9.0 * kPi * (1.0 - std::exp(-2.0 * kPi * a2))) *
                       (1.0 + 2.0 * std::sqrt(kPi) * std::exp(-tc.beta * kPi * a2));
  const double second = (2.0 * kPi + 1.0) * e_half_pi / (2.0 * sqrt2 * std::pow(kPi, 1.5));
  tc.c_n = first + second;

  tc.weights.reserve(static_cast<std::size_t>(order));
  tc.denoms.reserve(static_cast<std::size_t>(order));
  for (int k = 1; k <= order; ++k) {
    const double h = k - 0.5;
    const double h2_over_a2 = h * h / a2;
    tc.weights.push_back(std::exp(-kPi * h2_over_a2));
    tc.denoms.push_back(2.0 * h2_over_a2);
  }
  return tc;
}

ComplexValue taylor_eval(double x, const TaylorCoefficients& tc) {
  const double z = x * x;
  const auto& c = tc.coeffs;
  ComplexValue p = c.back();
  for (auto k = c.size() - 1; k-- > 0;) {
    p = {p.re * z + c[k].re, p.im * z + c[k].im};
  }
  return p * x;
}

double taylor_bound(double x, int order) {
  if (!(x >= 0.0)) throw std::domain_error("taylor_bound: x must be >= 0");
  require_order(order, 0, "taylor_bound");
  if (x == 0.0) return 0.0;
  const double n = order;
  // First omitted term: pi^(N+1) x^(2N+3) / (2^(N+1) (2N+3) (N+1)!), in logs.
  const double log_first = (n + 1.0) * std::log(kPi / 2.0) + (2.0 * n + 3.0) * std::log(x) -
                           std::log(2.0 * n + 3.0) - std::lgamma(n + 2.0);
  const double first = std::exp(log_first);
  // The second omitted term by ratio to the first.
  const double second = first * (kPi * x * x / 2.0) * (2.0 * n + 3.0) / ((2.0 * n + 5.0) * (n + 2.0));
  return first + second;
}

ComplexValue trap_eval(double x, const TrapCoefficients& tc) {
  const double pi_a = kPi * tc.a_n;
  if (!(x > 0.0) || !(pi_a * x < std::log(DBL_MAX))) {
    throw std::domain_error("trap_eval: x outside (0, ln(DBL_MAX)/(pi A_N))");
  }

  // (1+i)/(exp((1-i) pi A x) + 1) == (1+i) E / (1 + E), E = exp(-(1-i) pi A x).
  // Below 2^-64 the term cannot affect the result and is dropped.
  ComplexValue fermi{};
  const double decay = std::exp(-pi_a * x);
  if (decay > 0x1p-64) {
    const ComplexValue e = cis_pi(reduce_mod2(tc.a_n * x), 0.0) * decay;
    const ComplexValue numer{e.re - e.im, e.re + e.im};  // (1+i) E
    const double dr = 1.0 + e.re;
    const double di = e.im;
    const double dd = dr * dr + di * di;
    fermi = {(numer.re * dr + numer.im * di) / dd, (numer.im * dr - numer.re * di) / dd};
  }

  // sum w_k / (z + i d_k) = sum w_k (z - i d_k) / (z^2 + d_k^2)
  // The leading terms are summed in long double: with plain doubles their
  // round-off alone can exceed 1e-16 in the result for x near x1. Terms
  // with weight below 2^-7 are small enough for double.
  using Wide = long double;
  const double zd = x * x;
  const Wide z = static_cast<Wide>(x) * x;
  const std::size_t n = tc.weights.size();
  std::size_t k = 0;
  Wide scale_sum = 0.0L;
  Wide sum_im = 0.0L;
  for (; k < n && tc.weights[k] > 0x1p-7; ++k) {
    const Wide d = tc.denoms[k];
    const Wide scale = tc.weights[k] / (z * z + d * d);
    scale_sum += scale;
    sum_im -= scale * d;
  }
  double tail_scale = 0.0;
  double tail_im = 0.0;
  for (; k < n; ++k) {
    const double d = tc.denoms[k];
    const double scale = tc.weights[k] / (zd * zd + d * d);
    tail_scale += scale;
    tail_im -= scale * d;
  }
  const Wide sum_re = (scale_sum + tail_scale) * z;
  sum_im += tail_im;

  // - (2 i x / (pi A)) phase * sum
  const ComplexValue u = unit_phase(x);
  const Wide t_re = u.re * sum_re - u.im * sum_im;
  const Wide t_im = u.re * sum_im + u.im * sum_re;
  const Wide q = 2.0L * x / (kPiLong * tc.a_n);
  return {static_cast<double>((0.5L - fermi.re) + q * t_im), static_cast<double>((0.5L - fermi.im) - q * t_re)};
}

double trap_bound(int order) {
  require_order(order, 1, "trap_bound");
  const double c_n = trap_constants(order).c_n;
  const double n = order;
  return std::exp(std::log(2.0 * std::numbers::sqrt2 * c_n) - kPi * n - std::log(2.0 * n + 1.0));
}

ComplexValue asym_eval(double x, const AsymCoefficients& ac) {
  if (!(x > 0.0)) throw std::domain_error("asym_eval: x must be > 0");
  const double r = 1.0 / x;
  const double w = r * r;
  const auto& c = ac.coeffs;
  ComplexValue p = c.back();
  for (auto k = c.size() - 1; k-- > 0;) {
    p = {p.re * w + c[k].re, p.im * w + c[k].im};
  }
  const ComplexValue tail = unit_phase(x) * (p * r);
  return kLimitAtInfinity + tail;
}

double asym_bound(double x, int order) {
  if (!(x > 0.0)) throw std::domain_error("asym_bound: x must be > 0");
  require_order(order, 0, "asym_bound");
  const double n = order;
  // ln (2N-1)!! = ln (2N)! - N ln 2 - ln N!
  const double log_df = std::lgamma(2.0 * n + 1.0) - n * std::numbers::ln2 - std::lgamma(n + 1.0);
  return std::exp(log_df - (n + 1.0) * std::log(kPi) - (2.0 * n + 1.0) * std::log(x));
}

}  // namespace fresnel::kernels
