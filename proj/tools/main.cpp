#include <iostream>
#include <string>
#include <vector>

#include "d4cs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return d4cs::run_cli(args, std::cout, std::cerr);
}
