#include <iostream>
#include <string>
#include <vector>

#include "fluid_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fluid::cli::run(args, std::cout, std::cerr);
}
