#include <iostream>
#include <string>
#include <vector>

#include "catchain/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return catchain::run_cli(args, std::cout, std::cerr);
}
