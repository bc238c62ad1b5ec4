#include <iostream>
#include <vector>

#include "pkit/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pkit::run_cli(std::move(args), std::cout, std::cerr);
}
