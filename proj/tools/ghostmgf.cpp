#include <iostream>
#include <string>
#include <vector>

#include "ghostmgf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ghostmgf::cli::run(args, std::cout, std::cerr);
}
