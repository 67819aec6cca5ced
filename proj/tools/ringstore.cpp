#include <iostream>
#include <string>
#include <vector>

#include "ringstore/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ringstore::run_cli(args, std::cout, std::cerr);
}
