#include <iostream>
#include <string>
#include <vector>

#include "nearfield/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nearfield::cli::run(args, std::cout, std::cerr);
}
