#include <iostream>
#include <string>
#include <vector>

#include "barpoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return barpoly::run_cli(args, std::cout, std::cerr);
}
