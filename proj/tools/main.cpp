#include <iostream>

#include "settlegen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return settlegen::run_cli(args, std::cout, std::cerr);
}
