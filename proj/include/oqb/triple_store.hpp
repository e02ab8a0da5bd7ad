// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_TRIPLE_STORE_HPP
#define OQB_TRIPLE_STORE_HPP

#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oqb/sparql.hpp"

namespace oqb {

using ObjectTerm = std::variant<Iri, Literal>;

struct GroundTriple {
  Iri subject;
  Iri predicate;
  ObjectTerm object;

  friend auto operator<=>(const GroundTriple&, const GroundTriple&) = default;
  friend bool operator==(const GroundTriple&, const GroundTriple&) = default;
};

RdfTerm to_rdf_term(const ObjectTerm& term);

/// Solution sequence of a SELECT query. Rows are duplicate-free, bind every
/// listed variable, and are sorted by the N-Triples form of their terms.
struct BindingTable {
  std::vector<std::string> vars;  // without '?'
  std::vector<std::vector<RdfTerm>> rows;

  friend bool operator==(const BindingTable&, const BindingTable&) = default;
};

/// In-memory set of ground triples with subject, predicate and object
/// indexes. Readers may run concurrently; writers need exclusive access.
class TripleStore {
 public:
  TripleStore() = default;
  TripleStore(const TripleStore& other);
  TripleStore& operator=(const TripleStore& other);
  TripleStore(TripleStore&&) noexcept = default;
  TripleStore& operator=(TripleStore&&) noexcept = default;

  /// Returns true when the triple was not present before.
  bool insert(const GroundTriple& t);
  /// Returns true when the triple was present.
  bool remove(const GroundTriple& t);

  bool contains(const GroundTriple& t) const { return triples_.count(t) != 0; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const std::set<GroundTriple>& triples() const noexcept { return triples_; }

  /// Triples matching the given constants; nullptr means "any". Uses the
  /// most selective available index.
  std::vector<const GroundTriple*> match(const Iri* subject, const Iri* predicate,
                                         const ObjectTerm* object) const;

  friend bool operator==(const TripleStore& a, const TripleStore& b) {
    return a.triples_ == b.triples_;
  }

 private:
  using Bucket = std::set<const GroundTriple*>;

  void index(const GroundTriple* t);
  void unindex(const GroundTriple* t);
  void rebuild_indexes();

  std::set<GroundTriple> triples_;
  std::map<Iri, Bucket> by_subject_;
  std::map<Iri, Bucket> by_predicate_;
  std::map<ObjectTerm, Bucket> by_object_;
};

/// Loads the N-Triples subset `<iri> <iri> <iri> .` / `<iri> <iri> "lit" .`
/// with '#' comment lines. Throws PositionedError(ParseError).
TripleStore load_ntriples(std::string_view document);
TripleStore load_ntriples(std::istream& document);

/// Writes the store back in the same subset, one triple per line, sorted.
std::string to_ntriples(const TripleStore& store);

/// Conjunctive evaluation of the query's basic graph pattern, projected to
/// the SELECT list, duplicates removed, rows sorted. Never mutates `store`.
BindingTable evaluate(const SparqlQuery& q, const TripleStore& store);

}  // namespace oqb

#endif  // OQB_TRIPLE_STORE_HPP
