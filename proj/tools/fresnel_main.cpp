#include <iostream>
#include <string>
#include <vector>

#include "fresnel/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return fresnel::cli::run(args, std::cout, std::cerr);
}
