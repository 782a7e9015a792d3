#include "fresnel/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

namespace fresnel::oracle {

namespace {

constexpr double kSeriesTermFloor = 1e-34;
constexpr double kQuadratureAgreement = 1e-27;
constexpr int kMaxRefinements = 8;
constexpr int kGaussOrder = 32;

struct GaussRule {
  // Positive nodes and their weights; the rule is symmetric.
  std::array<ExtendedReal, kGaussOrder / 2> nodes;
  std::array<ExtendedReal, kGaussOrder / 2> weights;
};

// P_n(x) and P_{n-1}(x) by the three-term recurrence.
template <typename Real>
std::pair<Real, Real> legendre_pair(const Real& x) {
  Real p_prev{1.0};
  Real p = x;
  for (int k = 2; k <= kGaussOrder; ++k) {
    Real next = (x * p * double(2 * k - 1) - p_prev * double(k - 1)) / Real{double(k)};
    p_prev = p;
    p = next;
  }
  return {p, p_prev};
}

template <typename Real>
Real legendre_derivative(const Real& x, const Real& p, const Real& p_prev) {
  return (x * p - p_prev) * double(kGaussOrder) / (x * x - Real{1.0});
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    GaussRule r;
    constexpr double kPi = 3.141592653589793;
    for (int i = 0; i < kGaussOrder / 2; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (kGaussOrder + 0.5));
      for (int it = 0; it < 100; ++it) {
        const auto [p, pm] = legendre_pair(x);
        const double dx = p / legendre_derivative(x, p, pm);
        x -= dx;
        if (std::fabs(dx) < 1e-17) break;
      }
      ExtendedReal xe{x};
      for (int it = 0; it < 3; ++it) {
        const auto [p, pm] = legendre_pair(xe);
        xe = xe - p / legendre_derivative(xe, p, pm);
      }
      const auto [p, pm] = legendre_pair(xe);
      const ExtendedReal dp = legendre_derivative(xe, p, pm);
      r.nodes[i] = xe;
      r.weights[i] = ExtendedReal{2.0} / ((ExtendedReal{1.0} - xe * xe) * dp * dp);
    }
    return r;
  }();
  return rule;
}

ExtendedComplex integrate_panels(double x, long panels) {
  const GaussRule& rule = gauss_rule();
  const ExtendedReal length{x};
  const ExtendedReal count{double(panels)};
  const ExtendedReal half = (length / count) * 0.5;
  ExtendedComplex total{};
  for (long j = 0; j < panels; ++j) {
    const ExtendedReal mid = (length * double(2 * j + 1)) / count * 0.5;
    ExtendedComplex panel{};
    for (int i = 0; i < kGaussOrder / 2; ++i) {
      const ExtendedReal offset = half * rule.nodes[i];
      const ExtendedComplex both = unit_phase(mid + offset) + unit_phase(mid - offset);
      panel = panel + both * rule.weights[i];
    }
    total = total + panel * half;
  }
  return total;
}

ExtendedComplex odd_extension(double x, ExtendedComplex g) { return std::signbit(x) ? -g : g; }

}  // namespace

ExtendedComplex series_route(double x) {
  const double ax = std::fabs(x);
  if (ax == 0.0) return odd_extension(x, {});
  const ExtendedReal xe{ax};
  const ExtendedReal z = kPiDd * (xe * xe) * 0.5;  // pi x^2 / 2
  ExtendedReal power = xe;                         // z^k x / k!
  ExtendedComplex sum{xe, ExtendedReal{0.0}};
  for (int k = 1; k < 1000; ++k) {
    power = power * z / ExtendedReal{double(k)};
    const ExtendedReal term = power / ExtendedReal{double(2 * k + 1)};
    switch (k % 4) {
      case 0: sum.re += term; break;
      case 1: sum.im += term; break;
      case 2: sum.re -= term; break;
      default: sum.im -= term; break;
    }
    if (k > z.hi && std::fabs(term.hi) < kSeriesTermFloor) return odd_extension(x, sum);
  }
  throw std::runtime_error("oracle series route did not converge at x = " + std::to_string(x));
}

ExtendedComplex quadrature_route(double x) {
  const double ax = std::fabs(x);
  if (ax == 0.0) return odd_extension(x, {});
  const double panel_length = std::min(0.25, 1.0 / ax);
  long panels = static_cast<long>(std::ceil(ax / panel_length));
  ExtendedComplex previous = integrate_panels(ax, panels);
  for (int level = 0; level < kMaxRefinements; ++level) {
    panels *= 2;
    const ExtendedComplex refined = integrate_panels(ax, panels);
    if (max_abs_diff(refined, previous) <= kQuadratureAgreement) return odd_extension(x, refined);
    previous = refined;
  }
  throw std::runtime_error("oracle quadrature did not converge at x = " + std::to_string(x));
}

ExtendedComplex asymptotic_route(double x) {
  const double ax = std::fabs(x);
  if (!(ax > 0.0)) throw std::domain_error("oracle asymptotic route needs x != 0");
  const ExtendedReal xe{ax};
  const ExtendedReal inv = ExtendedReal{1.0} / xe;
  const ExtendedReal step = inv * inv / kPiDd;  // 1 / (pi x^2)
  ExtendedReal term = inv / kPiDd;              // (2k-1)!! / (pi^(k+1) x^(2k+1))
  ExtendedComplex sum{};
  for (int k = 0;; ++k) {
    // coefficient (-i)^(k+1)
    switch (k % 4) {
      case 0: sum.im -= term; break;
      case 1: sum.re -= term; break;
      case 2: sum.im += term; break;
      default: sum.re += term; break;
    }
    if (std::fabs(term.hi) < kSeriesTermFloor) break;
    const ExtendedReal next = term * step * double(2 * k + 1);
    if (!(next < term)) {
      if (term.hi > 1e-30) {
        throw std::runtime_error("oracle asymptotic route cannot reach 1e-30 at x = " +
                                 std::to_string(x));
      }
      break;
    }
    term = next;
  }
  const ExtendedComplex g = ExtendedComplex{ExtendedReal{0.5}, ExtendedReal{0.5}} + unit_phase(xe) * sum;
  return odd_extension(x, g);
}

ExtendedComplex oracle_g(double x) {
  if (std::isnan(x) || !(std::fabs(x) <= kMaxArgument)) {
    throw std::domain_error("oracle_g: |x| must be <= 1e12");
  }
  const double ax = std::fabs(x);
  if (ax <= kSeriesLimit) return series_route(x);
  if (ax <= kQuadratureLimit) return quadrature_route(x);
  return asymptotic_route(x);
}

SelfCheckReport oracle_selfcheck() {
  SelfCheckReport report;
  auto add = [&](std::string name, double value, double tolerance) {
    report.checks.push_back({std::move(name), value <= tolerance, value, tolerance});
  };
  char label[96];

  for (double x : {2.0, 2.5, 3.0}) {
    std::snprintf(label, sizeof label, "route overlap series/quadrature at x=%g", x);
    add(label, max_abs_diff(series_route(x), quadrature_route(x)), 1e-24);
  }
  for (double x : {18.0, 20.0, 25.0}) {
    std::snprintf(label, sizeof label, "route overlap quadrature/asymptotic at x=%g", x);
    add(label, max_abs_diff(quadrature_route(x), asymptotic_route(x)), 1e-24);
  }

  // Central differences of C against the integrand cos(pi x^2 / 2).
  constexpr double kStep = 1e-6;
  auto derivative_error = [](double x) {
    const double xp = x + kStep;
    const double xm = x - kStep;
    const ExtendedReal dc = oracle_g(xp).re - oracle_g(xm).re;
    const ExtendedReal dx = ExtendedReal{xp} - ExtendedReal{xm};
    const double slope = (dc / dx).to_double();
    return std::fabs(slope - unit_phase(ExtendedReal{x}).re.to_double());
  };
  add("derivative of C at x=0", derivative_error(0.0), 1e-8);
  std::mt19937_64 rng(20210617);
  std::uniform_real_distribution<double> dist(0.1, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) worst = std::max(worst, derivative_error(dist(rng)));
  add("derivative of C at 20 random x in [0.1, 10]", worst, 1e-8);

  const ExtendedComplex far = oracle_g(1e6);
  const double dist_to_limit =
      std::hypot((far.re - ExtendedReal{0.5}).to_double(), (far.im - ExtendedReal{0.5}).to_double());
  add("limit |G(1e6) - (1+i)/2| <= 1/(pi 1e6)", dist_to_limit, 1.0 / (3.141592653589793 * 1e6) * (1.0 + 1e-9));
  return report;
}

}  // namespace fresnel::oracle
