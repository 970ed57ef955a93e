#include <iostream>
#include <string>
#include <vector>

#include "isofam/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return isofam::cli::run(args, std::cout, std::cerr);
}
