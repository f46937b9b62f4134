#include <iostream>
#include <string>
#include <vector>

#include "dynemb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dynemb::cli::run(args, std::cout, std::cerr);
}
