#include <iostream>
#include <string>
#include <vector>

#include "flagmodel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flagmodel::cli::run(args, std::cout, std::cerr);
}
