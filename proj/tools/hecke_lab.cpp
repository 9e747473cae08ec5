#include <iostream>
#include <string>
#include <vector>

#include "hecke_lab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hecke_lab::cli::run(args, std::cout, std::cerr);
}
