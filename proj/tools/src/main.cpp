#include <iostream>

#include "hskein_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hskein::cli::run(args, std::cout, std::cerr);
}
