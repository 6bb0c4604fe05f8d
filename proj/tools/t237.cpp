#include <iostream>
#include <string>
#include <vector>

#include "t237/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return t237::cli::run(args, std::cout, std::cerr);
}
