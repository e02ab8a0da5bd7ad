// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include "oqb/sparql.hpp"

namespace oqb {

std::string quote_literal(std::string_view lexical) {
  std::string out;
  out.reserve(lexical.size() + 2);
  out += '"';
  for (char c : lexical) {
    switch (c) {
      // Raw line breaks are not allowed inside a short SPARQL string.
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string term_to_sparql(const RdfTerm& term, const NamespaceTable& prefixes) {
  if (const auto* iri = std::get_if<Iri>(&term)) return display_iri(prefixes, *iri);
  if (const auto* var = std::get_if<Variable>(&term)) return "?" + var->name;
  return quote_literal(std::get<Literal>(term).lexical);
}

std::string term_to_ntriples(const RdfTerm& term) {
  if (const auto* iri = std::get_if<Iri>(&term)) return "<" + iri->str() + ">";
  if (const auto* var = std::get_if<Variable>(&term)) return "?" + var->name;
  return quote_literal(std::get<Literal>(term).lexical);
}

std::string serialize(const SparqlQuery& q) {
  std::string out;
  for (const auto& [prefix, ns] : q.prefixes.entries()) {
    out += "PREFIX " + prefix + ": <" + ns.str() + ">\n";
  }
  if (!q.prefixes.empty()) out += '\n';

  out += "SELECT";
  for (const auto& v : q.select) out += " ?" + v;
  out += "\nWHERE {\n";

  for (std::size_t i = 0; i < q.where.size(); ++i) {
    const TriplePattern& p = q.where[i];
    bool continues_group = i > 0 && q.where[i - 1].subject == p.subject;
    if (continues_group) {
      out += " ;\n    ";
    } else {
      out += "  " + term_to_sparql(p.subject, q.prefixes) + ' ';
    }
    out += term_to_sparql(p.predicate, q.prefixes) + ' ' + term_to_sparql(p.object, q.prefixes);
    bool group_ends = i + 1 == q.where.size() || !(q.where[i + 1].subject == p.subject);
    if (group_ends) out += " .\n";
  }
  out += "}\n";
  return out;
}

}  // namespace oqb
