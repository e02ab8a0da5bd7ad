// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_SPARQL_HPP
#define OQB_SPARQL_HPP

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oqb/iri.hpp"
#include "oqb/ontology.hpp"
#include "oqb/query_graph.hpp"

namespace oqb {

/// A query variable; the name is stored without the '?' sigil.
struct Variable {
  std::string name;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// A plain literal (no datatype, no language tag).
struct Literal {
  std::string lexical;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using RdfTerm = std::variant<Iri, Variable, Literal>;

struct TriplePattern {
  RdfTerm subject;    // Iri or Variable
  RdfTerm predicate;  // Iri or Variable
  RdfTerm object;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

/// SELECT query over a conjunctive basic graph pattern.
struct SparqlQuery {
  NamespaceTable prefixes;
  std::vector<std::string> select;  // variable names without '?'
  std::vector<TriplePattern> where;

  friend bool operator==(const SparqlQuery&, const SparqlQuery&) = default;
};

/// Throws Error(SyntaxError) when `q` breaks the query invariants: empty
/// WHERE, a selected variable absent from WHERE, or a literal/variable in
/// a position that cannot hold it.
void check_query(const SparqlQuery& q);

/// Builds the query for a graph that validates strictly: one pattern per
/// edge in edge order, selection copied, and only the ontology prefixes that
/// some term is written with. Throws ValidationFailed.
SparqlQuery translate(const QueryGraph& g, const Ontology& o);

/// Canonical text: sorted PREFIX lines, a blank line, SELECT, then WHERE
/// with one pattern per line; consecutive patterns sharing a subject are
/// chained with ';'. LF line endings and a trailing newline.
std::string serialize(const SparqlQuery& q);

/// Parses the SELECT/BGP subset emitted by serialize plus the usual
/// whitespace, '.'-terminated and ','/';' abbreviated forms, '$' variables,
/// single-quoted literals and the 'a' keyword. Throws PositionedError
/// (SyntaxError) or UnsupportedConstruct.
SparqlQuery parse_sparql(std::string_view text);

/// N-Triples style rendering of a term: <iri>, ?var, "literal".
std::string term_to_ntriples(const RdfTerm& term);

/// Term as it appears in serialize() output under the given prefixes.
std::string term_to_sparql(const RdfTerm& term, const NamespaceTable& prefixes);

/// Double-quoted literal with '\', '"' and line breaks escaped.
std::string quote_literal(std::string_view lexical);

}  // namespace oqb

#endif  // OQB_SPARQL_HPP
