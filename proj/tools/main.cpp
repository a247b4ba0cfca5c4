#include <iostream>
#include <string>
#include <vector>

#include "rep12/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rep12::cli::run_cli(args, std::cout, std::cerr);
}
