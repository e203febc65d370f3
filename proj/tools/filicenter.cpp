#include <iostream>
#include <string>
#include <vector>

#include "filicenter/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return filicenter::cli::run(args, std::cout, std::cerr);
}
