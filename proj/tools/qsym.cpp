#include <iostream>

#include "qsym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qsym::run(args, std::cout, std::cerr);
}
