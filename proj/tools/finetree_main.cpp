// Binary entry point. Everything lives in the library so the test suite can
// drive the CLI in-process and capture its streams.

#include <iostream>
#include <string>
#include <vector>

#include "finetree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return finetree::run_cli(args, std::cout, std::cerr);
}
