#include <iostream>
#include <vector>

#include "ftgen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ftgen::run(args, std::cin, std::cout);
}
