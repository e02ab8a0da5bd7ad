// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

// Reference semantics for conjunctive SELECT queries: enumerate every
// assignment of the query's variables to terms that occur in the store and
// keep those under which every pattern becomes a stored triple. Terms are
// plain strings here ("<iri>" or "\"lexical\""), so nothing is shared with
// the evaluator under test except the input and output types.

#ifndef OQB_TESTS_BRUTE_FORCE_ORACLE_HPP
#define OQB_TESTS_BRUTE_FORCE_ORACLE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "oqb/sparql.hpp"
#include "oqb/triple_store.hpp"

namespace oqb::testing {

using OracleRow = std::vector<std::string>;

inline std::string oracle_key(const RdfTerm& t) {
  if (const auto* iri = std::get_if<Iri>(&t)) return "<" + iri->str() + ">";
  if (const auto* lit = std::get_if<Literal>(&t)) return "\"" + lit->lexical + "\"";
  return "?" + std::get<Variable>(t).name;
}

inline std::string oracle_key(const ObjectTerm& t) {
  if (const auto* iri = std::get_if<Iri>(&t)) return "<" + iri->str() + ">";
  return "\"" + std::get<Literal>(t).lexical + "\"";
}

/// Set of projected rows, each row the string keys of the selected terms.
inline std::set<OracleRow> brute_force_rows(const SparqlQuery& q, const TripleStore& store) {
  using Triple = std::tuple<std::string, std::string, std::string>;
  std::set<Triple> facts;
  std::set<std::string> universe;
  for (const auto& t : store.triples()) {
    Triple f{"<" + t.subject.str() + ">", "<" + t.predicate.str() + ">", oracle_key(t.object)};
    universe.insert(std::get<0>(f));
    universe.insert(std::get<1>(f));
    universe.insert(std::get<2>(f));
    facts.insert(std::move(f));
  }
  std::vector<std::string> terms(universe.begin(), universe.end());

  std::vector<std::string> vars;
  for (const auto& p : q.where) {
    for (const RdfTerm* t : {&p.subject, &p.predicate, &p.object}) {
      if (const auto* v = std::get_if<Variable>(t)) {
        if (std::find(vars.begin(), vars.end(), v->name) == vars.end()) vars.push_back(v->name);
      }
    }
  }

  std::set<OracleRow> rows;
  if (terms.empty() && !vars.empty()) return rows;
  std::vector<std::size_t> pick(vars.size(), 0);
  while (true) {
    std::map<std::string, std::string> env;
    for (std::size_t i = 0; i < vars.size(); ++i) env["?" + vars[i]] = terms[pick[i]];
    auto ground = [&env](const RdfTerm& t) {
      std::string k = oracle_key(t);
      auto it = env.find(k);
      return it == env.end() ? k : it->second;
    };
    bool all = std::all_of(q.where.begin(), q.where.end(), [&](const TriplePattern& p) {
      return facts.count({ground(p.subject), ground(p.predicate), ground(p.object)}) != 0;
    });
    if (all) {
      OracleRow row;
      for (const auto& name : q.select) row.push_back(env.at("?" + name));
      rows.insert(std::move(row));
    }
    // Odometer increment over all assignments.
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == terms.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return rows;
}

inline std::set<OracleRow> table_rows(const BindingTable& table) {
  std::set<OracleRow> rows;
  for (const auto& row : table.rows) {
    OracleRow r;
    for (const auto& t : row) r.push_back(oracle_key(t));
    rows.insert(std::move(r));
  }
  return rows;
}

}  // namespace oqb::testing

#endif  // OQB_TESTS_BRUTE_FORCE_ORACLE_HPP
