#include <iostream>

#include "inpp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return inpp::run_cli(args, std::cout, std::cerr);
}
