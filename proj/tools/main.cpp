#include <iostream>
#include <string>
#include <vector>

#include "wildchar_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wildchar::cli::run_cli(args, std::cout, std::cerr);
}
