#include <iostream>

#include "vnalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vnalg::cli::run(args, std::cout, std::cerr);
}
