#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fresnel/evaluator.hpp"
#include "fresnel/extended_real.hpp"

using namespace fresnel;

namespace {

struct GoldenRow {
  double x;
  ExtendedReal c;
  ExtendedReal s;
};

std::vector<GoldenRow> load_golden() {
  std::ifstream in(std::string(FRESNEL_TEST_DATA_DIR) + "/fresnel_golden_v1.tsv");
  REQUIRE(in.good());
  std::vector<GoldenRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string x, c, s;
    std::getline(fields, x, '\t');
    std::getline(fields, c, '\t');
    std::getline(fields, s, '\t');
    rows.push_back({std::stod(x), parse_extended(c), parse_extended(s)});
  }
  return rows;
}

}  // namespace

TEST_CASE("golden values") {
  const auto rows = load_golden();
  REQUIRE(rows.size() >= 180);
  for (const auto& row : rows) {
    CAPTURE(row.x);
    const ComplexValue g = fresnel_g(row.x).value;
    CHECK(std::fabs(g.re - row.c.to_double()) <= 1e-15);
    CHECK(std::fabs(g.im - row.s.to_double()) <= 1e-15);
  }
}

TEST_CASE("golden values are odd where both signs are listed") {
  const auto rows = load_golden();
  int pairs = 0;
  for (const auto& a : rows) {
    for (const auto& b : rows) {
      if (a.x > 0.0 && b.x == -a.x) {
        CHECK(a.c == -b.c);
        CHECK(a.s == -b.s);
        ++pairs;
      }
    }
  }
  CHECK(pairs == 4);
}
