#include "fresnel/extended_real.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace fresnel {

namespace {

ExtendedReal pow10(int k) {
  ExtendedReal result{1.0};
  ExtendedReal base{10.0};
  for (int n = std::abs(k); n > 0; n >>= 1) {
    if (n & 1) result *= base;
    base *= base;
  }
  return k < 0 ? ExtendedReal{1.0} / result : result;
}

struct SinCos {
  ExtendedReal s;
  ExtendedReal c;
};

// Direct series for |theta| <= pi/4; only used to build the table.
SinCos sincos_series(const ExtendedReal& theta) {
  const ExtendedReal t2 = theta * theta;
  ExtendedReal term = theta;  // theta^(2k+1)/(2k+1)!
  ExtendedReal s = theta;
  ExtendedReal c{1.0};
  ExtendedReal cterm{1.0};  // theta^(2k)/(2k)!
  for (int k = 1; k < 40; ++k) {
    cterm = -(cterm * t2) / ExtendedReal{double((2 * k - 1) * (2 * k))};
    term = -(term * t2) / ExtendedReal{double((2 * k) * (2 * k + 1))};
    c += cterm;
    s += term;
    if (std::fabs(cterm.hi) < 1e-36 && std::fabs(term.hi) < 1e-36) break;
  }
  return {s, c};
}

constexpr int kTableSteps = 64;  // table spacing pi / 64

// cos(j pi/64), sin(j pi/64) for j = 0..32 (first quadrant).
const std::array<SinCos, kTableSteps / 2 + 1>& quadrant_table() {
  static const auto table = [] {
    std::array<SinCos, kTableSteps / 2 + 1> t{};
    for (int j = 0; j <= kTableSteps / 4; ++j) {
      t[j] = sincos_series(kPiDd * (double(j) / kTableSteps));
    }
    for (int j = kTableSteps / 4 + 1; j <= kTableSteps / 2; ++j) {
      const SinCos& mirror = t[kTableSteps / 2 - j];
      t[j] = {mirror.c, mirror.s};
    }
    return t;
  }();
  return table;
}

SinCos table_entry(int j) {
  j = ((j % (2 * kTableSteps)) + 2 * kTableSteps) % (2 * kTableSteps);
  const int quadrant = j / (kTableSteps / 2);
  const SinCos& e = quadrant_table()[j % (kTableSteps / 2)];
  switch (quadrant) {
    case 0: return e;
    case 1: return {e.c, -e.s};
    case 2: return {-e.s, -e.c};
    default: return {-e.c, e.s};
  }
}

// Polynomial-only sin/cos for |theta| <= pi/128; 8 terms reach 1e-33.
SinCos sincos_small(const ExtendedReal& theta) {
  static const auto inv_fact = [] {
    std::array<ExtendedReal, 16> f{};
    f[0] = 1.0;
    for (int k = 1; k < 16; ++k) f[k] = f[k - 1] / ExtendedReal{double(k)};
    return f;
  }();
  const ExtendedReal t2 = theta * theta;
  ExtendedReal s = inv_fact[15];
  ExtendedReal c = inv_fact[14];
  for (int k = 7; k-- > 0;) {
    s = inv_fact[2 * k + 1] - t2 * s;
    c = inv_fact[2 * k] - t2 * c;
  }
  return {s * theta, c};
}

}  // namespace

ExtendedReal dd_arith(const ExtendedReal& a, const ExtendedReal& b, DdOp op) {
  switch (op) {
    case DdOp::add: return a + b;
    case DdOp::sub: return a - b;
    case DdOp::mul: return a * b;
    case DdOp::div:
      if (b.hi == 0.0) throw std::domain_error("dd_arith: division by zero");
      return a / b;
  }
  return {};
}

ExtendedComplex cis_pi(const ExtendedReal& r) {
  const double steps = std::nearbyint(r.hi * kTableSteps);
  // r.hi - steps/64 is exact: both are close and steps/64 has few bits.
  const ExtendedReal f = ExtendedReal{r.hi - steps / kTableSteps} + ExtendedReal{r.lo};
  const SinCos small = sincos_small(kPiDd * f);
  const SinCos base = table_entry(static_cast<int>(steps));
  return {base.c * small.c - base.s * small.s, base.s * small.c + base.c * small.s};
}

ExtendedComplex unit_phase(const ExtendedReal& t) {
  const ExtendedReal half_sq = (t * t) * 0.5;
  if (!std::isfinite(half_sq.hi)) return {ExtendedReal{NAN}, ExtendedReal{NAN}};
  ExtendedReal r = ExtendedReal{std::remainder(half_sq.hi, 2.0)} +
                   ExtendedReal{std::remainder(half_sq.lo, 2.0)};
  if (r.hi > 1.0) r -= ExtendedReal{2.0};
  if (r.hi < -1.0) r += ExtendedReal{2.0};
  return cis_pi(r);
}

double max_abs_diff(const ExtendedComplex& a, const ExtendedComplex& b) {
  return std::max(std::fabs((a.re - b.re).to_double()), std::fabs((a.im - b.im).to_double()));
}

std::string to_string(const ExtendedReal& v, int digits) {
  digits = std::clamp(digits, 1, 34);
  if (std::isnan(v.hi)) return "nan";
  if (std::isinf(v.hi)) return v.hi > 0 ? "inf" : "-inf";

  std::string out;
  if (std::signbit(v.hi)) out.push_back('-');
  if (v.hi == 0.0) {
    out += "0.";
    out.append(static_cast<std::size_t>(digits - 1), '0');
    out += "e+00";
    return out;
  }

  ExtendedReal r = abs(v);
  int exponent = static_cast<int>(std::floor(std::log10(r.hi)));
  r = r / pow10(exponent);
  if (r.hi >= 10.0) {
    r = r / ExtendedReal{10.0};
    ++exponent;
  } else if (r.hi < 1.0) {
    r = r * 10.0;
    --exponent;
  }

  std::vector<int> ds;
  ds.reserve(static_cast<std::size_t>(digits) + 1);
  for (int i = 0; i <= digits; ++i) {
    int d = static_cast<int>(std::floor(r.hi));
    ExtendedReal rest = r - ExtendedReal{double(d)};
    if (rest.hi < 0.0) {
      --d;
      rest += ExtendedReal{1.0};
    }
    d = std::clamp(d, 0, 9);
    ds.push_back(d);
    r = rest * 10.0;
  }

  // Round half up on the guard digit.
  const bool round_up = ds.back() >= 5;
  ds.pop_back();
  if (round_up) {
    int i = digits - 1;
    while (i >= 0 && ds[i] == 9) ds[i--] = 0;
    if (i >= 0) {
      ++ds[i];
    } else {
      ds.insert(ds.begin(), 1);
      ds.pop_back();
      ++exponent;
    }
  }

  out.push_back(static_cast<char>('0' + ds[0]));
  out.push_back('.');
  for (int i = 1; i < digits; ++i) out.push_back(static_cast<char>('0' + ds[i]));
  char exp_buf[16];
  std::snprintf(exp_buf, sizeof exp_buf, "e%+03d", exponent);
  out += exp_buf;
  return out;
}

ExtendedReal parse_extended(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&] {
    throw std::invalid_argument("parse_extended: malformed number '" + std::string(text) + "'");
  };
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';

  ExtendedReal mantissa{0.0};
  int decimal_shift = 0;
  int digit_count = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      any_digit = true;
      // Digits past 36 are below double-double resolution.
      if (digit_count < 36) {
        mantissa = mantissa * 10.0 + ExtendedReal{double(ch - '0')};
        if (seen_point) --decimal_shift;
        if (digit_count > 0 || ch != '0') ++digit_count;
      } else if (!seen_point) {
        ++decimal_shift;
      }
    } else {
      break;
    }
  }
  if (!any_digit) fail();

  int exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      exponent = std::min(exponent * 10 + (text[i] - '0'), 100000);
    }
    if (exp_negative) exponent = -exponent;
  }
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i != text.size()) fail();

  const int scale = exponent + decimal_shift;
  ExtendedReal value = scale >= 0 ? mantissa * pow10(scale) : mantissa / pow10(-scale);
  return negative ? -value : value;
}

}  // namespace fresnel
