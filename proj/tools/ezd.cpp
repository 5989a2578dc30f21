#include <iostream>

#include "ezd/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ezd::cli::run(args, std::cout, std::cerr);
}
