#include <iostream>
#include <string>
#include <vector>

#include "sggi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sggi::run_cli(args, std::cout, std::cerr);
}
