// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>

#include "oqb/error.hpp"
#include "oqb/sparql.hpp"

namespace oqb {

namespace {

RdfTerm node_term(const QueryNode& node, const Ontology& o) {
  switch (node.kind) {
    case NodeKind::Variable: return Variable{node.payload.substr(1)};
    case NodeKind::ClassTerm: return resolve(o, node.payload);
    case NodeKind::Literal: return Literal{node.payload};
  }
  return Literal{node.payload};
}

void note_prefix(const RdfTerm& term, const NamespaceTable& available, NamespaceTable& used) {
  const auto* iri = std::get_if<Iri>(&term);
  if (iri == nullptr) return;
  if (auto curie = available.compact(*iri)) {
    used.add(curie->prefix, *available.find(curie->prefix));
  }
}

}  // namespace

void check_query(const SparqlQuery& q) {
  if (q.where.empty()) throw Error(ErrorCode::SyntaxError, "WHERE block has no triple patterns");
  if (q.select.empty()) throw Error(ErrorCode::SyntaxError, "SELECT lists no variables");
  std::set<std::string> bound;
  for (const auto& p : q.where) {
    if (std::holds_alternative<Literal>(p.subject)) {
      throw Error(ErrorCode::SyntaxError, "literal in subject position");
    }
    if (std::holds_alternative<Literal>(p.predicate)) {
      throw Error(ErrorCode::SyntaxError, "literal in predicate position");
    }
    for (const RdfTerm* t : {&p.subject, &p.predicate, &p.object}) {
      if (const auto* v = std::get_if<Variable>(t)) bound.insert(v->name);
    }
  }
  for (const auto& v : q.select) {
    if (bound.count(v) == 0) {
      throw Error(ErrorCode::SyntaxError, "selected variable ?" + v + " does not occur in WHERE");
    }
  }
}

SparqlQuery translate(const QueryGraph& g, const Ontology& o) {
  auto diagnostics = validate(g, o, /*strict=*/true);
  if (has_errors(diagnostics)) throw ValidationFailed(std::move(diagnostics));

  SparqlQuery q;
  for (const auto& edge : g.edges()) {
    TriplePattern pattern{node_term(*g.find_node(edge.from), o), resolve(o, edge.predicate),
                          node_term(*g.find_node(edge.to), o)};
    note_prefix(pattern.subject, o.namespaces(), q.prefixes);
    note_prefix(pattern.predicate, o.namespaces(), q.prefixes);
    note_prefix(pattern.object, o.namespaces(), q.prefixes);
    q.where.push_back(std::move(pattern));
  }
  for (const auto& name : g.selected()) q.select.push_back(name.substr(1));
  return q;
}

}  // namespace oqb
