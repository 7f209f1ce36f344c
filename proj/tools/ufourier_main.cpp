#include <iostream>
#include <string>
#include <vector>

#include "ufourier/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ufourier::cli::run(args, std::cout, std::cerr);
}
