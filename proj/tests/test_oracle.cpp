#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "fresnel/oracle.hpp"

using namespace fresnel;
using namespace fresnel::oracle;

namespace {

struct Reference {
  double x;
  const char* c;
  const char* s;
};

// Computed independently at 50-digit precision.
const Reference kReferences[] = {
    {0.5, "0.49234422587144639287884366515668", "0.064732432859999277611480512230615"},
    {1.0, "0.77989340037682282947420641365269", "0.43825914739035476607675669662515"},
    {2.0, "0.48825340607534075450022350335726", "0.34341567836369824219530081595807"},
    {2.5, "0.45741300964177704524565610495614", "0.61918175581959293611357623979856"},
    {6.0, "0.49953146785550112018827990327114", "0.44696076123693027762392028784078"},
    {20.0, "0.49998733497234438818700621369766", "0.48408453592595389271475424485583"},
    {1e9, "0.49999999999999999999999999989868", "0.49999999968169011381620932846223"},
};

double abs_diff(const ExtendedReal& a, const ExtendedReal& b) { return std::fabs((a - b).to_double()); }

}  // namespace

TEST_CASE("oracle matches independent references to 1e-25") {
  for (const auto& ref : kReferences) {
    CAPTURE(ref.x);
    const ExtendedComplex g = oracle_g(ref.x);
    CHECK(abs_diff(g.re, parse_extended(ref.c)) <= 1e-25);
    CHECK(abs_diff(g.im, parse_extended(ref.s)) <= 1e-25);
  }
}

TEST_CASE("routes agree in the overlap bands") {
  for (double x : {2.0, 2.5, 3.0}) {
    CAPTURE(x);
    CHECK(max_abs_diff(series_route(x), quadrature_route(x)) <= 1e-24);
  }
  for (double x : {18.0, 20.0, 25.0}) {
    CAPTURE(x);
    CHECK(max_abs_diff(quadrature_route(x), asymptotic_route(x)) <= 1e-24);
  }
}

TEST_CASE("oracle is exactly odd") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(0.0, 30.0);
  for (int i = 0; i < 40; ++i) {
    const double x = dist(rng);
    const ExtendedComplex a = oracle_g(x);
    const ExtendedComplex b = oracle_g(-x);
    CHECK(a.re == -b.re);
    CHECK(a.im == -b.im);
  }
}

TEST_CASE("derivative of C is cos(pi x^2 / 2)") {
  const double h = 1e-6;
  for (double x : {0.0, 0.3, 1.0, 2.49, 2.51, 4.0, 7.5, 9.9}) {
    CAPTURE(x);
    const double slope = (oracle_g(x + h).re - oracle_g(x - h).re).to_double() / (2.0 * h);
    CHECK(std::fabs(slope - std::cos(std::numbers::pi * x * x / 2.0)) <= 1e-8);
  }
}

TEST_CASE("limit at large x") {
  const ExtendedComplex g = oracle_g(1e6);
  const double d = std::hypot((g.re - ExtendedReal{0.5}).to_double(), (g.im - ExtendedReal{0.5}).to_double());
  CHECK(d <= 1.0 / (std::numbers::pi * 1e6) * (1.0 + 1e-9));
  CHECK(d <= 1e-6);
}

TEST_CASE("domain") {
  CHECK(oracle_g(0.0).re.to_double() == 0.0);
  CHECK_NOTHROW(oracle_g(kMaxArgument));
  CHECK_THROWS_AS(oracle_g(2e12), std::domain_error);
  CHECK_THROWS_AS(oracle_g(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(asymptotic_route(3.0), std::runtime_error);
}

TEST_CASE("self-check report") {
  const SelfCheckReport report = oracle_selfcheck();
  CHECK(report.all_passed());
  CHECK(report.checks.size() >= 9);
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    CHECK(c.value <= c.tolerance);
  }
}
