#include <iostream>
#include <string>
#include <vector>

#include "majorkit_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return majorkit::cli::run(args, std::cout, std::cerr);
}
