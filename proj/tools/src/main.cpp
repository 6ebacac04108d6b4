#include <iostream>

#include "radharm/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return radharm::cli::run(args, std::cout, std::cerr);
}
