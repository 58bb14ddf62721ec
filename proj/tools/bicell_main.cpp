#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return bicell::cli::run_cli(args, std::cout, std::cerr, color);
}
