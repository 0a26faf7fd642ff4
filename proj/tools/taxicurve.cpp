#include <iostream>
#include <string>
#include <vector>

#include "taxicab/cli/command.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return taxicab::cli::run_cli(args, std::cout, std::cerr);
}
