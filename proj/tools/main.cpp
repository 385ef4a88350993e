#include <iostream>

#include "rootaut/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rootaut::run(args, std::cout, std::cerr);
}
