#include <iostream>
#include <string>
#include <vector>

#include "fpwords/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fpwords::run_cli(args, std::cout, std::cerr);
}
