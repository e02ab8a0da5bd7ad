// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_QUERY_GRAPH_HPP
#define OQB_QUERY_GRAPH_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "oqb/diagnostic.hpp"
#include "oqb/ontology.hpp"

namespace oqb {

enum class NodeKind { Variable, ClassTerm, Literal };

std::string_view to_string(NodeKind kind);
/// Accepts "variable", "class" and "literal". Throws Error(BadPayload).
NodeKind node_kind_from_string(std::string_view text);

/// A node of the drawn query. `payload` is a "?name" variable, a CURIE or
/// IRI naming a class, or the lexical form of a plain literal.
struct QueryNode {
  NodeId id;
  NodeKind kind = NodeKind::Variable;
  std::string payload;

  friend bool operator==(const QueryNode&, const QueryNode&) = default;
};

/// Directed predicate edge: `from` is the subject, `to` the object.
struct QueryEdge {
  NodeId from;
  NodeId to;
  std::string predicate;  // CURIE or IRI, resolved at validation time

  friend bool operator==(const QueryEdge&, const QueryEdge&) = default;
};

/// True for names matching \?[A-Za-z_][A-Za-z0-9_]*.
bool is_valid_variable_name(std::string_view name);

inline constexpr std::size_t kDefaultNodeCap = 12;

/// The editable graph of a query under construction.
///
/// Every mutating member either succeeds or throws leaving the graph exactly
/// as it was. Node ids are assigned from 1 upwards and never reused, even
/// after removal or clear().
class QueryGraph {
 public:
  explicit QueryGraph(std::size_t node_cap = kDefaultNodeCap);

  /// Throws CapExceeded, BadVariableName or BadPayload.
  NodeId add_node(NodeKind kind, std::string payload);

  /// Appends an edge and returns its index. Throws UnknownNode, SelfLoop,
  /// or BadPayload for a predicate that is not CURIE or IRI shaped.
  std::size_t add_edge(NodeId from, NodeId to, std::string predicate);

  /// Removes the node, every incident edge, and its variable from the
  /// selection. Throws UnknownNode.
  void remove_node(NodeId id);

  /// Throws UnknownEdge.
  void remove_edge(std::size_t index);

  /// Empties the graph; node_cap and the id counter are kept.
  void clear();

  /// Replaces the projection. Throws UnknownVariable.
  void set_selected(std::vector<std::string> variables);

  void set_question(std::string question) { question_ = std::move(question); }

  /// Reinserts a node under a known id (document loading). Throws
  /// CapExceeded, BadPayload, BadVariableName, or BadPayload for a duplicate
  /// or zero id.
  void restore_node(QueryNode node);

  /// Raises the id counter so the next add_node returns at least `next`.
  void reserve_ids(std::uint32_t next);

  const std::map<NodeId, QueryNode>& nodes() const noexcept { return nodes_; }
  const std::vector<QueryEdge>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& selected() const noexcept { return selected_; }
  const std::string& question() const noexcept { return question_; }
  std::size_t node_cap() const noexcept { return node_cap_; }
  std::uint32_t next_id() const noexcept { return next_id_; }

  const QueryNode* find_node(NodeId id) const;
  bool empty() const noexcept { return nodes_.empty() && edges_.empty(); }

  /// True when the variable name belongs to a live Variable node.
  bool has_variable(std::string_view name) const;

  friend bool operator==(const QueryGraph&, const QueryGraph&) = default;

 private:
  void check_payload(NodeKind kind, const std::string& payload) const;

  std::map<NodeId, QueryNode> nodes_;
  std::vector<QueryEdge> edges_;
  std::vector<std::string> selected_;
  std::string question_;
  std::size_t node_cap_;
  std::uint32_t next_id_ = 1;
};

/// Checks the graph against the ontology. An empty result means the graph
/// translates: every predicate is a known property, every class term a
/// known class, at least one edge exists, the selection is non-empty and
/// every variable takes part in an edge. Domain and range mismatches are
/// always warnings; `strict == false` downgrades unknown property and class
/// errors to warnings.
std::vector<Diagnostic> validate(const QueryGraph& g, const Ontology& o, bool strict);

namespace codes {
inline constexpr std::string_view kUnknownProperty = "UNKNOWN_PROPERTY";
inline constexpr std::string_view kUnknownClass = "UNKNOWN_CLASS";
inline constexpr std::string_view kEmptySelection = "EMPTY_SELECTION";
inline constexpr std::string_view kNoEdges = "NO_EDGES";
inline constexpr std::string_view kIsolatedVariable = "ISOLATED_VARIABLE";
inline constexpr std::string_view kLiteralSubject = "LITERAL_SUBJECT";
inline constexpr std::string_view kDomainMismatch = "DOMAIN_MISMATCH";
inline constexpr std::string_view kRangeMismatch = "RANGE_MISMATCH";
}  // namespace codes

}  // namespace oqb

#endif  // OQB_QUERY_GRAPH_HPP
