#include <iostream>
#include <string>
#include <vector>

#include "ifk/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ifk::cli::run(args, std::cout, std::cerr);
}
