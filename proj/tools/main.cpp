// Copyright (c) 2026 the monosg developers.
// Released under the Apache License 2.0 as described in the file LICENSE.

#include <iostream>
#include <string>
#include <vector>

#include "monosg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monosg::cli::run(args, std::cout, std::cerr);
}
