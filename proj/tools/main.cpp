#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

auto main(int argc, char** argv) -> int {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tw::cli::run_command(args, std::cout, std::cerr);
}
