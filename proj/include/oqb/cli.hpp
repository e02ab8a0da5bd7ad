// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_CLI_HPP
#define OQB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "oqb/sparql.hpp"
#include "oqb/triple_store.hpp"

namespace oqb {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `oqb` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Tab-separated result table: '?'-sigiled header row, then one line per
/// row with terms written as in SPARQL under `prefixes`.
std::string format_table(const BindingTable& table, const NamespaceTable& prefixes);

}  // namespace oqb

#endif  // OQB_CLI_HPP
