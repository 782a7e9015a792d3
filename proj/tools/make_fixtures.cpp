// Writes golden reference values of C(x) and S(x) from the oracle.
//
//   fresnel_make_fixtures [output-path]
//
// One line per point: x<TAB>C<TAB>S, x printed to 17 significant digits
// (exactly the double that was evaluated), C and S to 30.

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "fresnel/oracle.hpp"

namespace {

std::vector<double> golden_points() {
  std::vector<double> xs;
  for (int k = 0; k <= 160; ++k) xs.push_back(k / 10.0);  // 0.0 .. 16.0
  for (double x : {0.688, 6.725, 0.5, 0.25, 1e-3, 1e-8, 17.5, 19.75, 20.5, 25.0, 31.25, 50.0, 100.0, 1e3,
                   12345.678, 1e6, 1e9, 1e12}) {
    xs.push_back(x);
  }
  for (double x : {-0.5, -1.0, -6.725, -30.0}) xs.push_back(x);
  return xs;
}

std::string x_text(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

}  // namespace

int main(int argc, char** argv) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (argc > 1) {
    file.open(argv[1]);
    if (!file) {
      std::cerr << "cannot open " << argv[1] << '\n';
      return 1;
    }
    out = &file;
  }
  for (double x : golden_points()) {
    const fresnel::ExtendedComplex g = fresnel::oracle::oracle_g(x);
    *out << x_text(x) << '\t' << fresnel::to_string(g.re, 30) << '\t' << fresnel::to_string(g.im, 30) << '\n';
  }
  return 0;
}
