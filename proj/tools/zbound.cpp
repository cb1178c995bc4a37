#include <iostream>
#include <string>
#include <vector>

#include "zbound/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return zbound::cli::run(args, std::cout, std::cerr);
}
