#include <iostream>
#include <string>
#include <vector>

#include "weakring/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return weakring::run_cli(args, std::cout, std::cerr);
}
