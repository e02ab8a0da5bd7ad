// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

// Checks the checked-in fixture corpus. Usage: verify_fixtures [dir]

#include <iostream>

#include "oqb/fixtures.hpp"

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : OQB_FIXTURE_DIR;
  auto problems = oqb::verify_fixture_set(dir);
  for (const auto& p : problems) std::cerr << p << '\n';
  if (!problems.empty()) return 1;
  std::cout << "fixtures in " << dir.string() << " are consistent\n";
  return 0;
}
