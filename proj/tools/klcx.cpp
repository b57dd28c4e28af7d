#include <iostream>
#include <string>
#include <vector>

#include "klcx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return klcx::cli::run(args, std::cout, std::cerr);
}
