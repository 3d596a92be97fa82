#include <iostream>
#include <string>
#include <vector>

#include "morsecert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return morsecert::run_command(args, std::cout, std::cerr);
}
