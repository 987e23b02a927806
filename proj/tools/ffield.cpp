#include <iostream>
#include <string>
#include <vector>

#include "ff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ff::cli::run(args, std::cout, std::cerr);
}
