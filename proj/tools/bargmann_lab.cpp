#include <iostream>
#include <string>
#include <vector>

#include "blab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return blab::cli::run(args, std::cout, std::cerr);
}
