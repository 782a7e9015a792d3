#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fresnel/cli.hpp"
#include "fresnel/evaluator.hpp"
#include "fresnel/plan_io.hpp"
#include "json.hpp"

using namespace fresnel;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fresnel");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, sep);) fields.push_back(f);
  return fields;
}

}  // namespace

TEST_CASE("format_real round-trips") {
  for (double v : {0.0, 1.0, 0.1, -2.5e-300, 0.77989340037682283, 1.0 / 3.0, 6.725}) {
    CHECK(std::stod(cli::format_real(v)) == v);
  }
  CHECK(cli::format_real(0.0) == "0");
  CHECK(cli::format_real(0.688) == "0.68799999999999994");
}

TEST_CASE("eval") {
  auto r = run_cli({"eval", "0"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "0 0\n");

  r = run_cli({"eval", "1"});
  CHECK(r.code == cli::kExitOk);
  const auto parts = split(lines_of(r.out).at(0), ' ');
  REQUIRE(parts.size() == 2);
  CHECK(std::stod(parts[0]) == fresnel_c(1.0));
  CHECK(std::stod(parts[1]) == fresnel_s(1.0));
  CHECK(parts[0].rfind("0.77989340037682", 0) == 0);
  CHECK(parts[1].rfind("0.43825914739035", 0) == 0);

  r = run_cli({"eval", "-1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out[0] == '-');

  r = run_cli({"eval", "--json", "6.725"});
  CHECK(r.code == cli::kExitOk);
  const json rec = json::parse(r.out);
  CHECK(rec.at("branch") == "asymptotic");
  CHECK(rec.at("negated") == false);
  CHECK(rec.at("x").get<double>() == 6.725);
  CHECK(rec.at("bound").get<double>() <= 0x1p-52);

  r = run_cli({"--json", "eval", "0.3"});
  CHECK(json::parse(r.out).at("branch") == "taylor");
}

TEST_CASE("eval errors") {
  for (const char* bad : {"abc", "1.5x", "", "inf", "nan", "-inf"}) {
    CAPTURE(bad);
    const auto r = run_cli({"eval", bad});
    CHECK(r.code == cli::kExitUsage);
    CHECK_FALSE(r.err.empty());
  }
  CHECK(run_cli({"eval"}).code == cli::kExitUsage);
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"nope"}).code == cli::kExitUsage);
  CHECK(run_cli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("table") {
  auto r = run_cli({"table", "0", "1", "2"});
  CHECK(r.code == cli::kExitOk);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "x,C,S,branch");
  CHECK(lines[1] == "0,0,0,taylor");
  CHECK(lines[2].rfind("1,", 0) == 0);
  CHECK(r.out.find('\r') == std::string::npos);

  r = run_cli({"table", "-1", "1", "3"});
  lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[2] == "0,0,0,taylor");

  r = run_cli({"table", "0", "15", "1000"});
  CHECK(r.code == cli::kExitOk);
  lines = lines_of(r.out);
  REQUIRE(lines.size() == 1001);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    REQUIRE(f.size() == 4);
    const double x = std::stod(f[0]);
    const ComplexValue g = fresnel_g(x).value;
    CHECK(std::fabs(std::stod(f[1])) < 0.9);
    CHECK(std::fabs(std::stod(f[2])) < 0.9);
    // Printed values parse back to exactly the evaluated doubles.
    CHECK(std::stod(f[1]) == g.re);
    CHECK(std::stod(f[2]) == g.im);
    CHECK(f[3] == to_string(fresnel_g(x).tag.branch));
  }

  CHECK(run_cli({"table", "1", "0", "5"}).code == cli::kExitUsage);
  CHECK(run_cli({"table", "0", "1", "1"}).code == cli::kExitUsage);
  CHECK(run_cli({"table", "0", "x", "5"}).code == cli::kExitUsage);
}

TEST_CASE("plan") {
  auto r = run_cli({"plan"});
  CHECK(r.code == cli::kExitOk);
  CHECK(parse_plan(r.out) == default_double_plan());
  const json j = json::parse(r.out);
  CHECK(j.at("n_taylor") == 14);
  CHECK(j.at("n_trap") == 12);
  CHECK(j.at("n_asym") == 12);
  CHECK(j.at("x1").get<double>() == 0.688);
  CHECK(j.at("x2").get<double>() == 6.725);
  CHECK(j.at("achieved").size() == 3);

  r = run_cli({"--eps", "1e-8", "plan"});
  CHECK(r.code == cli::kExitOk);
  const HybridPlan p = parse_plan(r.out);
  CHECK(p.satisfies_bounds());
  CHECK(p.n_trap() < 12);
  CHECK(p.eps() == 1e-8);

  r = run_cli({"plan", "--eps", "1e-18"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.err.find("2^-52") != std::string::npos);

  CHECK(run_cli({"plan", "--eps", "1"}).code == cli::kExitUsage);
  CHECK(run_cli({"plan", "--eps", "1e-30"}).code == cli::kExitUsage);
  CHECK(run_cli({"plan", "--eps", "abc"}).code == cli::kExitUsage);
}

TEST_CASE("clothoid") {
  auto r = run_cli({"clothoid", "-1", "1", "3"});
  CHECK(r.code == cli::kExitOk);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "s,C,S");
  CHECK(lines[2] == "0,0,0");

  r = run_cli({"clothoid", "0", "1", "2"});
  lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  const auto eval = split(lines_of(run_cli({"eval", "1"}).out).at(0), ' ');
  CHECK(lines[2] == "1," + eval[0] + "," + eval[1]);

  CHECK(run_cli({"clothoid", "1", "0", "5"}).code == cli::kExitUsage);
  CHECK(run_cli({"clothoid", "0", "1", "1"}).code == cli::kExitUsage);
}

TEST_CASE("plan file from the environment") {
  const auto path = std::filesystem::temp_directory_path() / "fresnel_cli_env_plan.json";
  std::ofstream(path) << serialize_plan(plan(1e-6));
  ::setenv("FRESNEL_PLAN_FILE", path.string().c_str(), 1);

  auto r = run_cli({"plan"});
  CHECK(r.code == cli::kExitOk);
  CHECK(parse_plan(r.out) == plan(1e-6));
  // --eps takes precedence over the file.
  r = run_cli({"--eps", "1e-4", "plan"});
  CHECK(parse_plan(r.out) == plan(1e-4));

  std::ofstream(path) << serialize_plan(HybridPlan::from_parameters(1e-6, 3, 4, 4, 2.0, 9.0));
  r = run_cli({"plan"});
  CHECK(r.code == cli::kExitUsage);

  ::setenv("FRESNEL_PLAN_FILE", "/nonexistent/plan.json", 1);
  CHECK(run_cli({"eval", "1"}).code == cli::kExitUsage);

  ::unsetenv("FRESNEL_PLAN_FILE");
  std::filesystem::remove(path);
  CHECK(parse_plan(run_cli({"plan"}).out) == default_double_plan());
}

TEST_CASE("selftest") {
  auto r = run_cli({"selftest", "--samples", "20"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("selftest: all suites passed") != std::string::npos);

  r = run_cli({"--json", "selftest", "--samples", "10"});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j.at("passed") == true);
  CHECK(j.at("suites").size() > 10);

  r = run_cli({"selftest", "--samples", "10", "--tamper-x1", "2.0"});
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.out.find("[FAIL] plan branch bounds within eps") != std::string::npos);

  CHECK(run_cli({"selftest", "--samples", "0"}).code == cli::kExitUsage);
}

TEST_CASE("bench") {
  auto r = run_cli({"bench", "--evals", "20000", "--reps", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("taylor") != std::string::npos);
  CHECK(r.out.find("trapezoid") != std::string::npos);
  CHECK(r.out.find("asymptotic") != std::string::npos);
  CHECK(r.out.find("ratio") != std::string::npos);

  r = run_cli({"--json", "bench", "--evals", "20000", "--reps", "3"});
  const json j = json::parse(r.out);
  for (const char* key : {"taylor_ns", "trapezoid_ns", "asymptotic_ns", "ratio"}) {
    CAPTURE(key);
    CHECK(j.at(key).get<double>() > 0.0);
  }
  CHECK(j.at("evals") == 20000);
  CHECK(j.at("repetitions") == 3);
}
