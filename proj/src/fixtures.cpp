// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include "oqb/fixtures.hpp"

#include <fstream>
#include <iterator>

#include "oqb/cli.hpp"
#include "oqb/document.hpp"
#include "oqb/error.hpp"
#include "oqb/ontology.hpp"
#include "oqb/sparql.hpp"
#include "oqb/triple_store.hpp"

namespace oqb {

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot read " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

std::vector<std::string> verify_fixture_set(const std::filesystem::path& dir) {
  std::vector<std::string> problems;
  auto check = [&problems](const std::string& what, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      problems.push_back(what + ": " + e.what());
    }
  };

  std::optional<Ontology> ontology;
  check("sensor.owl", [&] {
    ontology = load_ontology_file(dir / "sensor.owl");
    if (has_errors(ontology->diagnostics())) {
      problems.push_back("sensor.owl: ontology has Error diagnostics");
    }
  });
  std::optional<TripleStore> registry;
  check("registry.nt", [&] { registry = load_ntriples(slurp(dir / "registry.nt")); });

  for (const auto& name : kFixtureQueries) {
    std::string doc_name = name + ".oqb";
    check(doc_name, [&] {
      QueryDocument d = load_document_file(dir / doc_name);
      if (!ontology) return;
      auto diagnostics = validate(d.graph, *ontology, /*strict=*/true);
      if (has_errors(diagnostics)) {
        problems.push_back(doc_name + ": graph does not validate strictly");
        return;
      }
      SparqlQuery q = translate(d.graph, *ontology);
      std::string text = serialize(q);
      if (text != d.sparql) problems.push_back(doc_name + ": stored SPARQL differs from translation");
      if (text != slurp(dir / "golden" / (name + ".rq"))) {
        problems.push_back(doc_name + ": translation differs from golden/" + name + ".rq");
      }
      if (registry) {
        std::string table = format_table(evaluate(q, *registry), q.prefixes);
        if (table != slurp(dir / "golden" / (name + ".tsv"))) {
          problems.push_back(doc_name + ": result differs from golden/" + name + ".tsv");
        }
      }
    });
  }

  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir / "golden", ec)) {
    if (entry.path().extension() != ".rq") continue;
    std::string label = "golden/" + entry.path().filename().string();
    check(label, [&] { parse_sparql(slurp(entry.path())); });
  }
  if (ec) problems.push_back("golden: " + ec.message());
  return problems;
}

}  // namespace oqb
