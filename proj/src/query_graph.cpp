// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include "oqb/query_graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "oqb/error.hpp"

namespace oqb {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Variable: return "variable";
    case NodeKind::ClassTerm: return "class";
    case NodeKind::Literal: return "literal";
  }
  return "variable";
}

NodeKind node_kind_from_string(std::string_view text) {
  if (text == "variable") return NodeKind::Variable;
  if (text == "class") return NodeKind::ClassTerm;
  if (text == "literal") return NodeKind::Literal;
  throw Error(ErrorCode::BadPayload, "unknown node kind '" + std::string(text) + "'");
}

bool is_valid_variable_name(std::string_view name) {
  if (name.size() < 2 || name.front() != '?') return false;
  auto ident = name.substr(1);
  auto head = static_cast<unsigned char>(ident.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(ident.begin(), ident.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

bool is_term_reference(std::string_view text) {
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    return Iri::is_valid(text.substr(1, text.size() - 2));
  }
  return Iri::is_valid(text) || Curie::parse(text).has_value();
}

std::string node_label(NodeId id) { return "node " + std::to_string(id.value); }

}  // namespace

QueryGraph::QueryGraph(std::size_t node_cap) : node_cap_(node_cap) {
  if (node_cap_ == 0) throw Error(ErrorCode::BadPayload, "node cap must be positive");
}

void QueryGraph::check_payload(NodeKind kind, const std::string& payload) const {
  switch (kind) {
    case NodeKind::Variable:
      if (!is_valid_variable_name(payload)) {
        throw Error(ErrorCode::BadVariableName,
                    "'" + payload + "' is not a variable name (expected ?name)");
      }
      break;
    case NodeKind::ClassTerm:
      if (!is_term_reference(payload)) {
        throw Error(ErrorCode::BadPayload, "'" + payload + "' is not a prefixed name or IRI");
      }
      break;
    case NodeKind::Literal:
      if (payload.find_first_of("\r\n") != std::string::npos) {
        throw Error(ErrorCode::BadPayload, "literal must not contain line breaks");
      }
      break;
  }
}

NodeId QueryGraph::add_node(NodeKind kind, std::string payload) {
  if (nodes_.size() >= node_cap_) {
    throw Error(ErrorCode::CapExceeded,
                "node limit (" + std::to_string(node_cap_) + ") reached");
  }
  check_payload(kind, payload);
  NodeId id{next_id_};
  nodes_.emplace(id, QueryNode{id, kind, std::move(payload)});
  ++next_id_;
  return id;
}

void QueryGraph::restore_node(QueryNode node) {
  if (nodes_.size() >= node_cap_) {
    throw Error(ErrorCode::CapExceeded,
                "node limit (" + std::to_string(node_cap_) + ") reached");
  }
  if (node.id.value == 0 || nodes_.count(node.id) != 0) {
    throw Error(ErrorCode::BadPayload, "duplicate or zero node id " + std::to_string(node.id.value));
  }
  check_payload(node.kind, node.payload);
  next_id_ = std::max(next_id_, node.id.value + 1);
  nodes_.emplace(node.id, std::move(node));
}

void QueryGraph::reserve_ids(std::uint32_t next) { next_id_ = std::max(next_id_, next); }

std::size_t QueryGraph::add_edge(NodeId from, NodeId to, std::string predicate) {
  if (nodes_.count(from) == 0) throw Error(ErrorCode::UnknownNode, "unknown " + node_label(from));
  if (nodes_.count(to) == 0) throw Error(ErrorCode::UnknownNode, "unknown " + node_label(to));
  if (from == to) throw Error(ErrorCode::SelfLoop, "edge from " + node_label(from) + " to itself");
  if (!is_term_reference(predicate)) {
    throw Error(ErrorCode::BadPayload, "'" + predicate + "' is not a prefixed name or IRI");
  }
  edges_.push_back({from, to, std::move(predicate)});
  return edges_.size() - 1;
}

void QueryGraph::remove_node(NodeId id) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw Error(ErrorCode::UnknownNode, "unknown " + node_label(id));
  QueryNode removed = std::move(it->second);
  nodes_.erase(it);
  std::erase_if(edges_, [id](const QueryEdge& e) { return e.from == id || e.to == id; });
  if (removed.kind == NodeKind::Variable && !has_variable(removed.payload)) {
    std::erase(selected_, removed.payload);
  }
}

void QueryGraph::remove_edge(std::size_t index) {
  if (index >= edges_.size()) {
    throw Error(ErrorCode::UnknownEdge, "unknown edge " + std::to_string(index));
  }
  edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(index));
}

void QueryGraph::clear() {
  nodes_.clear();
  edges_.clear();
  selected_.clear();
  question_.clear();
}

void QueryGraph::set_selected(std::vector<std::string> variables) {
  for (const auto& v : variables) {
    if (!has_variable(v)) throw Error(ErrorCode::UnknownVariable, "no variable node named " + v);
  }
  selected_.clear();
  for (auto& v : variables) {
    if (std::find(selected_.begin(), selected_.end(), v) == selected_.end()) {
      selected_.push_back(std::move(v));
    }
  }
}

const QueryNode* QueryGraph::find_node(NodeId id) const {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

bool QueryGraph::has_variable(std::string_view name) const {
  return std::any_of(nodes_.begin(), nodes_.end(), [name](const auto& entry) {
    return entry.second.kind == NodeKind::Variable && entry.second.payload == name;
  });
}

// validation ----------------------------------------------------------------

namespace {

class Validator {
 public:
  Validator(const QueryGraph& g, const Ontology& o, bool strict) : g_(g), o_(o), strict_(strict) {}

  std::vector<Diagnostic> run() {
    for (const auto& [id, node] : g_.nodes()) check_node(node);
    for (std::size_t i = 0; i < g_.edges().size(); ++i) check_edge(i, g_.edges()[i]);
    check_graph();
    return std::move(out_);
  }

 private:
  void add(Severity severity, std::string_view code, std::string message,
           std::variant<std::monostate, NodeId, EdgeIndex> subject) {
    out_.push_back({severity, std::string(code), std::move(message), "", subject});
  }

  Severity lookup_severity() const { return strict_ ? Severity::Error : Severity::Warning; }

  // The class a node stands for, when the node is a resolvable class term.
  std::optional<Iri> class_of(const QueryNode& node) const {
    if (node.kind != NodeKind::ClassTerm) return std::nullopt;
    auto iri = try_resolve(o_, node.payload);
    if (!iri || o_.find_class(*iri) == nullptr) return std::nullopt;
    return iri;
  }

  bool within_any(const Iri& cls, const std::set<Iri>& allowed) const {
    return std::any_of(allowed.begin(), allowed.end(),
                       [&](const Iri& a) { return o_.is_subclass_or_same(cls, a); });
  }

  void check_node(const QueryNode& node) {
    if (node.kind != NodeKind::ClassTerm) return;
    auto iri = try_resolve(o_, node.payload);
    if (!iri || o_.find_class(*iri) == nullptr) {
      add(lookup_severity(), codes::kUnknownClass,
          "'" + node.payload + "' is not a class of " + o_.source_name(), node.id);
    }
  }

  void check_edge(std::size_t index, const QueryEdge& edge) {
    EdgeIndex where{index};
    const QueryNode* subject = g_.find_node(edge.from);
    const QueryNode* object = g_.find_node(edge.to);
    if (subject != nullptr && subject->kind == NodeKind::Literal) {
      add(Severity::Error, codes::kLiteralSubject,
          "literal \"" + subject->payload + "\" cannot be the subject of " + edge.predicate, where);
    }
    auto iri = try_resolve(o_, edge.predicate);
    const PropertyDef* prop = iri ? o_.find_property(*iri) : nullptr;
    if (prop == nullptr) {
      add(lookup_severity(), codes::kUnknownProperty,
          "'" + edge.predicate + "' is not a property of " + o_.source_name(), where);
      return;
    }
    if (subject != nullptr && !prop->domains.empty()) {
      if (auto cls = class_of(*subject); cls && !within_any(*cls, prop->domains)) {
        add(Severity::Warning, codes::kDomainMismatch,
            subject->payload + " is outside the domain of " + edge.predicate, where);
      }
    }
    if (object == nullptr) return;
    if (prop->kind == PropertyKind::Object) {
      if (object->kind == NodeKind::Literal) {
        add(Severity::Warning, codes::kRangeMismatch,
            "object property " + edge.predicate + " points at a literal", where);
      } else if (auto cls = class_of(*object);
                 cls && !prop->ranges.empty() && !within_any(*cls, prop->ranges)) {
        add(Severity::Warning, codes::kRangeMismatch,
            object->payload + " is outside the range of " + edge.predicate, where);
      }
    } else if (object->kind == NodeKind::ClassTerm) {
      add(Severity::Warning, codes::kRangeMismatch,
          "datatype property " + edge.predicate + " points at class " + object->payload, where);
    }
  }

  void check_graph() {
    if (g_.edges().empty()) {
      add(Severity::Error, codes::kNoEdges, "the query has no edges", {});
    }
    if (g_.selected().empty()) {
      add(Severity::Error, codes::kEmptySelection, "no output variable is selected", {});
    }
    std::set<NodeId> linked;
    for (const auto& e : g_.edges()) {
      linked.insert(e.from);
      linked.insert(e.to);
    }
    for (const auto& [id, node] : g_.nodes()) {
      if (node.kind == NodeKind::Variable && linked.count(id) == 0) {
        add(Severity::Error, codes::kIsolatedVariable,
            node.payload + " is not connected to any edge", id);
      }
    }
  }

  const QueryGraph& g_;
  const Ontology& o_;
  bool strict_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate(const QueryGraph& g, const Ontology& o, bool strict) {
  return Validator(g, o, strict).run();
}

}  // namespace oqb
