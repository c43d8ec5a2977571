#include <iostream>
#include <string>
#include <vector>

#include "fbsel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fbsel::run(args, std::cout, std::cerr);
}
