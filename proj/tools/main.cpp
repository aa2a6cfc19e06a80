#include <iostream>
#include <string>
#include <vector>

#include "pointlike/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pointlike::run_cli(args, std::cout, std::cerr);
}
