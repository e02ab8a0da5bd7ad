// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_DIAGNOSTIC_HPP
#define OQB_DIAGNOSTIC_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace oqb {

/// Identifier of a node inside one QueryGraph. Assigned monotonically from 1.
struct NodeId {
  std::uint32_t value = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

/// Position of an edge in a QueryGraph's insertion-ordered edge list.
struct EdgeIndex {
  std::size_t value = 0;

  friend auto operator<=>(const EdgeIndex&, const EdgeIndex&) = default;
};

enum class Severity { Error, Warning };

std::string_view to_string(Severity severity);

/// A non-fatal finding produced while loading an ontology or validating a
/// query graph. `location` is a human readable source position ("file:line")
/// for ontology diagnostics; `subject` names the node or edge for graph
/// diagnostics.
struct Diagnostic {
  Severity severity = Severity::Warning;
  std::string code;
  std::string message;
  std::string location;
  std::variant<std::monostate, NodeId, EdgeIndex> subject;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// One-line rendering used by the CLI: "error UNKNOWN_PROPERTY edge 0: ...".
std::string format_diagnostic(const Diagnostic& d);

}  // namespace oqb

#endif  // OQB_DIAGNOSTIC_HPP
