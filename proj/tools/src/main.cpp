#include <iostream>

#include "meetlogic_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return meet::cli::run(args, std::cout, std::cerr);
}
