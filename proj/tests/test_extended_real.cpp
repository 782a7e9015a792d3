#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "fresnel/extended_real.hpp"

using namespace fresnel;

namespace {

// |a - b| relative to |a|, evaluated in double-double.
double rel_diff(const ExtendedReal& a, const ExtendedReal& b) {
  return std::fabs((a - b).to_double()) / std::fabs(a.to_double());
}

ExtendedReal random_dd(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> dist(1.0, 2.0);
  const double hi = dist(rng) * scale;
  const double lo = (dist(rng) - 1.5) * hi * 0x1p-53;
  return ExtendedReal::from_sum(hi, lo);
}

}  // namespace

TEST_CASE("error-free transformations") {
  const auto [s, e] = detail::two_sum(1.0, 0x1p-60);
  CHECK(s == 1.0);
  CHECK(e == 0x1p-60);
  const auto [p, f] = detail::two_prod(1.0 + 0x1p-30, 1.0 + 0x1p-30);
  CHECK(p == 1.0 + 0x1p-29);
  CHECK(f == 0x1p-60);
}

TEST_CASE("round-trip identities hold to 30 digits") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    const double scale = std::ldexp(1.0, static_cast<int>(rng() % 40) - 20);
    const ExtendedReal a = random_dd(rng, scale);
    const ExtendedReal b = random_dd(rng, scale);
    CHECK(rel_diff(a, (a + b) - b) <= 1e-30);
    CHECK(rel_diff(a, (a - b) + b) <= 1e-30);
    CHECK(rel_diff(a, (a * b) / b) <= 1e-30);
    CHECK(rel_diff(a, (a / b) * b) <= 1e-30);
  }
}

TEST_CASE("dd_arith dispatch") {
  const ExtendedReal a{3.0};
  const ExtendedReal b{4.0};
  CHECK(dd_arith(a, b, DdOp::add).to_double() == 7.0);
  CHECK(dd_arith(a, b, DdOp::sub).to_double() == -1.0);
  CHECK(dd_arith(a, b, DdOp::mul).to_double() == 12.0);
  CHECK(dd_arith(a, b, DdOp::div).to_double() == 0.75);
  CHECK_THROWS_AS(dd_arith(a, ExtendedReal{0.0}, DdOp::div), std::domain_error);
}

TEST_CASE("pi squared to 31 digits") {
  const ExtendedReal pi2 = kPiDd * kPiDd;
  const ExtendedReal ref = parse_extended("9.8696044010893586188344909998761511");
  CHECK(rel_diff(ref, pi2) <= 1e-31);
}

TEST_CASE("decimal conversion") {
  CHECK(to_string(ExtendedReal{0.0}) == "0.00000000000000000000000000000e+00");
  CHECK(to_string(ExtendedReal{1.0}, 5) == "1.0000e+00");
  CHECK(to_string(ExtendedReal{-0.25}, 3) == "-2.50e-01");

  const char* text = "7.79893400376822829474206413653e-01";
  CHECK(to_string(parse_extended(text)) == text);
  CHECK(parse_extended("1").to_double() == 1.0);
  CHECK(parse_extended("-12.5e3").to_double() == -12500.0);
  CHECK(parse_extended("+.5").to_double() == 0.5);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const ExtendedReal v = random_dd(rng, std::ldexp(1.0, static_cast<int>(rng() % 200) - 100));
    CHECK(rel_diff(v, parse_extended(to_string(v, 32))) <= 1e-30);
  }

  CHECK_THROWS_AS(parse_extended(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_extended("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_extended("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_extended("1e"), std::invalid_argument);
  CHECK_THROWS_AS(parse_extended("-"), std::invalid_argument);
}

TEST_CASE("cis_pi and unit_phase") {
  const ExtendedComplex one = cis_pi(ExtendedReal{0.0});
  CHECK(one.re.to_double() == 1.0);
  CHECK(one.im.to_double() == 0.0);

  // cos(pi/4)^2 = 1/2 to double-double accuracy
  const ExtendedComplex q = cis_pi(ExtendedReal{0.25});
  CHECK(std::fabs((q.re * q.re - ExtendedReal{0.5}).to_double()) <= 1e-31);
  CHECK(std::fabs((q.re - q.im).to_double()) <= 1e-31);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const ExtendedComplex z = cis_pi(ExtendedReal{dist(rng)});
    const ExtendedReal norm = z.re * z.re + z.im * z.im;
    CHECK(std::fabs((norm - ExtendedReal{1.0}).to_double()) <= 1e-30);
  }

  const ExtendedComplex u = unit_phase(ExtendedReal{1.0});  // exp(i pi/2)
  CHECK(std::fabs(u.re.to_double()) <= 1e-31);
  CHECK(std::fabs((u.im - ExtendedReal{1.0}).to_double()) <= 1e-31);
  const ExtendedComplex w = unit_phase(ExtendedReal{1e6});  // x^2/2 even
  CHECK(std::fabs((w.re - ExtendedReal{1.0}).to_double()) <= 1e-31);
}
