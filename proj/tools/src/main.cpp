#include <iostream>
#include <string>
#include <vector>

#include "abelcat/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return abelcat::cli::run_main(args, std::cout, std::cerr);
}
