#include <iostream>
#include <string>
#include <vector>

#include "dunklcas/commands.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dunklcas::run_cli(args, std::cout, std::cerr);
}
