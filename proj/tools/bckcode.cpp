#include <iostream>
#include <string>
#include <vector>

#include "bckcode/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bck::cli::run(args, std::cout, std::cerr);
}
