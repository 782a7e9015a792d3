#include "fresnel/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "CLI11.hpp"
#include "fresnel/bench.hpp"
#include "fresnel/evaluator.hpp"
#include "fresnel/plan_io.hpp"
#include "fresnel/selftest.hpp"
#include "json.hpp"

namespace fresnel::cli {

namespace {

using nlohmann::json;

double parse_real(const std::string& text, const char* what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " '" + text + "' as a real number");
  }
  return v;
}

struct GlobalFlags {
  std::optional<double> eps;
  bool json = false;
};

HybridPlan resolve_plan(const GlobalFlags& flags, std::ostream& err) {
  if (flags.eps) {
    if (*flags.eps < 0x1p-52 && *flags.eps >= kMinPlanEps) {
      err << "note: eps below 2^-52; the plan's bounds hold but double-precision kernels "
             "cannot deliver that accuracy\n";
    }
    return plan(*flags.eps);
  }
  if (const char* path = std::getenv("FRESNEL_PLAN_FILE"); path != nullptr && *path != '\0') {
    return load_plan_file(path);
  }
  return default_double_plan();
}

json eval_record(double x, const HybridPlan& p) {
  const FresnelResult r = fresnel_g(x, p);
  return {{"x", x},
          {"c", r.value.re},
          {"s", r.value.im},
          {"branch", std::string(to_string(r.tag.branch))},
          {"negated", r.tag.negated},
          {"bound", active_bound(std::fabs(x), p)}};
}

int cmd_eval(const std::string& x_text, const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  const double x = parse_real(x_text, "x");
  const HybridPlan p = resolve_plan(flags, err);
  if (flags.json) {
    out << eval_record(x, p).dump() << '\n';
  } else {
    const ComplexValue g = fresnel_g(x, p).value;
    out << format_real(g.re) << ' ' << format_real(g.im) << '\n';
  }
  return kExitOk;
}

int cmd_table(const std::string& a_text, const std::string& b_text, int n, const GlobalFlags& flags,
              std::ostream& out, std::ostream& err) {
  const double a = parse_real(a_text, "a");
  const double b = parse_real(b_text, "b");
  if (!(std::isfinite(a) && std::isfinite(b) && a < b) || n < 2) {
    throw std::domain_error("table: need finite a < b and n >= 2");
  }
  const HybridPlan p = resolve_plan(flags, err);
  std::string text = "x,C,S,branch\n";
  for (int k = 0; k < n; ++k) {
    const double x = (k == n - 1) ? b : a + k * (b - a) / (n - 1);
    const FresnelResult r = fresnel_g(x, p);
    text += format_real(x) + ',' + format_real(r.value.re) + ',' + format_real(r.value.im) + ',' +
            std::string(to_string(r.tag.branch)) + '\n';
  }
  out << text;
  return kExitOk;
}

int cmd_plan(const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  out << serialize_plan(resolve_plan(flags, err)) << '\n';
  return kExitOk;
}

int cmd_clothoid(const std::string& s0_text, const std::string& s1_text, int n, const GlobalFlags& flags,
                 std::ostream& out, std::ostream& err) {
  const double s0 = parse_real(s0_text, "s0");
  const double s1 = parse_real(s1_text, "s1");
  const HybridPlan p = resolve_plan(flags, err);
  std::string text = "s,C,S\n";
  for (const ClothoidPoint& pt : clothoid_sample(s0, s1, n, p)) {
    text += format_real(pt.s) + ',' + format_real(pt.c) + ',' + format_real(pt.sv) + '\n';
  }
  out << text;
  return kExitOk;
}

int cmd_selftest(const GlobalFlags& flags, std::optional<double> tamper_x1, int samples, std::ostream& out,
                 std::ostream& err) {
  HybridPlan p = resolve_plan(flags, err);
  if (tamper_x1) {
    p = HybridPlan::from_parameters(p.eps(), p.n_taylor(), p.n_trap(), p.n_asym(), *tamper_x1, p.x2());
  }
  SelfTestOptions options;
  options.samples = samples;
  const SelfTestReport report = run_selftest(p, options);

  if (flags.json) {
    json suites = json::array();
    for (const auto& s : report.suites) {
      suites.push_back({{"name", s.name},
                        {"passed", s.passed},
                        {"max_error", s.max_error},
                        {"samples", s.samples},
                        {"violations", s.violations},
                        {"detail", s.detail}});
    }
    out << json{{"passed", report.all_passed()}, {"suites", suites}}.dump(2) << '\n';
  } else {
    for (const auto& s : report.suites) {
      out << (s.passed ? "[PASS] " : "[FAIL] ") << s.name << "  max_error=" << format_real(s.max_error)
          << " samples=" << s.samples << " violations=" << s.violations;
      if (!s.detail.empty()) out << "  (" << s.detail << ')';
      out << '\n';
    }
    out << (report.all_passed() ? "selftest: all suites passed\n" : "selftest: FAILED\n");
  }
  return report.all_passed() ? kExitOk : kExitFailure;
}

int cmd_bench(const GlobalFlags& flags, const BenchOptions& options, std::ostream& out, std::ostream& err) {
  const BenchReport report = run_bench(resolve_plan(flags, err), options);
  if (flags.json) {
    json j;
    for (const auto& t : report.timings) j[std::string(to_string(t.branch)) + "_ns"] = t.ns_per_eval;
    j["ratio"] = report.ratio();
    j["evals"] = report.evals;
    j["repetitions"] = report.repetitions;
    out << j.dump(2) << '\n';
  } else {
    char line[128];
    out << "branch      interval              ns/eval (median of " << report.repetitions << ")\n";
    for (const auto& t : report.timings) {
      std::snprintf(line, sizeof line, "%-11s [%7.3f, %7.3f]  %10.2f\n", std::string(to_string(t.branch)).c_str(),
                    t.lo, t.hi, t.ns_per_eval);
      out << line;
    }
    std::snprintf(line, sizeof line, "max/min ratio: %.3f\n", report.ratio());
    out << line;
  }
  return kExitOk;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fresnel integrals C(x), S(x) by a three-branch piecewise approximation", "fresnel"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  double eps_value = 0.0;
  auto* eps_opt = app.add_option("--eps", eps_value, "Target absolute accuracy; replans instead of the default plan");
  app.add_flag("--json", flags.json, "Machine-readable output");

  std::string x_text;
  auto* eval = app.add_subcommand("eval", "Print C(x) and S(x)");
  eval->add_option("x", x_text)->required();

  std::string a_text, b_text;
  int rows = 0;
  auto* table = app.add_subcommand("table", "CSV of x,C,S,branch on a uniform grid");
  table->add_option("a", a_text)->required();
  table->add_option("b", b_text)->required();
  table->add_option("n", rows)->required();

  auto* plan_cmd = app.add_subcommand("plan", "Print the plan as JSON");

  auto* clothoid = app.add_subcommand("clothoid", "CSV of s,C,S points along the clothoid");
  clothoid->add_option("s0", a_text)->required();
  clothoid->add_option("s1", b_text)->required();
  clothoid->add_option("n", rows)->required();

  std::optional<double> tamper_x1;
  int samples = 100;
  auto* selftest = app.add_subcommand("selftest", "Check the approximation against the reference oracle");
  selftest->add_option("--samples", samples, "Random points per suite")->check(CLI::PositiveNumber);
  selftest->add_option("--tamper-x1", tamper_x1)->group("");

  BenchOptions bench_options;
  auto* bench = app.add_subcommand("bench", "Time each branch");
  bench->add_option("--evals", bench_options.evals, "Evaluations per branch")->check(CLI::PositiveNumber);
  bench->add_option("--reps", bench_options.repetitions, "Timed repetitions")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (eps_opt->count() > 0) flags.eps = eps_value;

  try {
    if (eval->parsed()) return cmd_eval(x_text, flags, out, err);
    if (table->parsed()) return cmd_table(a_text, b_text, rows, flags, out, err);
    if (plan_cmd->parsed()) return cmd_plan(flags, out, err);
    if (clothoid->parsed()) return cmd_clothoid(a_text, b_text, rows, flags, out, err);
    if (selftest->parsed()) return cmd_selftest(flags, tamper_x1, samples, out, err);
    if (bench->parsed()) return cmd_bench(flags, bench_options, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace fresnel::cli
