#include <iostream>
#include <string>
#include <vector>

#include "twistforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return twistforge::dispatch(args, std::cout, std::cerr);
}
