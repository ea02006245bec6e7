#include <iostream>

#include "srball/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return srball::run_cli(args, std::cout, std::cerr);
}
