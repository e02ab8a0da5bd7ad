// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "oqb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return oqb::run_cli(args, std::cout, std::cerr);
}
