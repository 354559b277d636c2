#include <iostream>
#include <vector>

#include "theta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return theta::run_cli(args, std::cout, std::cerr);
}
