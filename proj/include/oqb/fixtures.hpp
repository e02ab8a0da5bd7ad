// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_FIXTURES_HPP
#define OQB_FIXTURES_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace oqb {

/// Query documents shipped in the fixture directory, without extension.
inline const std::vector<std::string> kFixtureQueries = {"experiment1", "experiment2", "alarm"};

/// Checks the bundled corpus: sensor.owl loads without errors, each query
/// document validates strictly, stores the SPARQL its graph translates to,
/// matches golden/<name>.rq byte for byte and runs over registry.nt to
/// golden/<name>.tsv; every golden .rq parses. Returns one message per
/// violated check, empty when the corpus is consistent.
std::vector<std::string> verify_fixture_set(const std::filesystem::path& dir);

}  // namespace oqb

#endif  // OQB_FIXTURES_HPP
