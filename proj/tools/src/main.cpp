#include <iostream>

#include "equigen_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return equigen::cli::runCli(args, std::cout, std::cerr);
}
