#include <iostream>
#include <string>
#include <vector>

#include "wellspec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wellspec::cli::run(args, std::cout, std::cerr);
}
