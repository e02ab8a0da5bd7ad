// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// fails. Each check is independent of the unit tests but shares their
// fixtures, generators and the brute-force oracle.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "oqb/document.hpp"
#include "oqb/error.hpp"
#include "oqb/ontology.hpp"
#include "oqb/query_graph.hpp"
#include "oqb/sparql.hpp"
#include "oqb/triple_store.hpp"
#include "support/brute_force_oracle.hpp"
#include "support/generators.hpp"
#include "support/test_paths.hpp"

namespace oqb {
namespace {

using testing::golden;
using testing::sensor_ontology;
using testing::tp;

// Thrown by require(); carries the reason printed on the FAIL line.
struct CheckFailed {
  std::string reason;
};

void require(bool ok, const std::string& reason) {
  if (!ok) throw CheckFailed{reason};
}

std::size_t pattern_count(const SparqlQuery& q) { return q.where.size(); }

bool has_pattern(const SparqlQuery& q, const TriplePattern& p) {
  return std::find(q.where.begin(), q.where.end(), p) != q.where.end();
}

SparqlQuery translate_fixture(const std::string& name) {
  return translate(testing::fixture_document(name).graph, sensor_ontology());
}

// 1. Ontology reading.
void ontology_reading() {
  std::string text = testing::read_text(testing::fixture("sensor.owl"));
  Ontology first = parse_ontology(text, "sensor.owl");
  require(!has_errors(first.diagnostics()), "sensor.owl has error diagnostics");
  require(first.classes().size() == 10, "expected 10 classes, got " + std::to_string(first.classes().size()));
  require(first.properties().size() == 7,
          "expected 7 properties, got " + std::to_string(first.properties().size()));

  const std::map<std::string, std::string> subclass_edges = {
      {"CameraSensor", "Sensor"}, {"MotionDetector", "Sensor"}, {"Image", "Data"},
      {"Video", "Data"},          {"Audio", "Data"},            {"Room", "Location"}};
  std::size_t edges = 0;
  for (const auto& [iri, c] : first.classes()) edges += c.parents.size();
  require(edges == subclass_edges.size(), "unexpected number of subclass edges");
  for (const auto& [child, parent] : subclass_edges) {
    const ClassDef* c = first.find_class(tp(child));
    require(c != nullptr && c->parents == std::set<Iri>{tp(parent)}, child + " should be a subclass of " + parent);
  }
  for (int i = 0; i < 100; ++i) {
    require(parse_ontology(text, "sensor.owl") == first, "re-parse " + std::to_string(i) + " differs");
  }
}

// 2. Experiment 1.
void experiment1() {
  SparqlQuery q = translate_fixture("experiment1");
  std::string text = serialize(q);
  require(text == golden("experiment1.rq"), "translation differs from golden experiment1.rq");
  require(text.find("?x tp:hasCameraResource ?image") != std::string::npos, "missing the camera pattern");
  BindingTable t = evaluate(q, testing::registry());
  require(t.rows.size() == 1, "expected 1 row, got " + std::to_string(t.rows.size()));
  require(t.rows[0] == std::vector<RdfTerm>{tp("img42")}, "?image is not tp:img42");
}

// 3. Experiment 2.
void experiment2() {
  SparqlQuery q = translate_fixture("experiment2");
  require(serialize(q) == golden("experiment2.rq"), "translation differs from golden experiment2.rq");
  require(pattern_count(q) == 3, "expected 3 patterns, got " + std::to_string(pattern_count(q)));
  require(q.select == std::vector<std::string>{"Location", "Image", "Video"}, "select order is wrong");
  BindingTable t = evaluate(q, testing::registry());
  require(t.rows.size() == 1, "expected 1 row, got " + std::to_string(t.rows.size()));
}

// 4. Alarm scenario.
void alarm() {
  SparqlQuery q = translate_fixture("alarm");
  require(serialize(q) == golden("alarm.rq"), "translation differs from golden alarm.rq");
  require(pattern_count(q) == 5, "expected 5 patterns, got " + std::to_string(pattern_count(q)));
  require(has_pattern(q, {Variable{"z"}, tp("get_detection"), Literal{"true"}}),
          "missing ?z tp:get_detection \"true\"");
  BindingTable t = evaluate(q, testing::registry());
  require(t.rows.size() == 1 && t.rows[0] == std::vector<RdfTerm>{Literal{"http://registry.example/cam1/latest"}},
          "alarm did not return the cam1 URL");

  TripleStore flipped = testing::registry();
  flipped.remove({tp("motion1"), tp("get_detection"), Literal{"true"}});
  flipped.insert({tp("motion1"), tp("get_detection"), Literal{"false"}});
  require(evaluate(q, flipped).rows.empty(), "flipped detection still returns rows");
}

// 5. Syntax conformance.
void syntax_conformance() {
  for (const char* name : {"experiment1.rq", "experiment2.rq", "alarm.rq"}) parse_sparql(golden(name));
  testing::Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    QueryGraph g = testing::random_valid_graph(rng, sensor_ontology());
    std::string text = serialize(translate(g, sensor_ontology()));
    try {
      parse_sparql(text);
    } catch (const Error& e) {
      throw CheckFailed{"graph " + std::to_string(i) + ": " + std::string(to_string(e.code())) + " " + e.what()};
    }
  }
  const char* foaf = R"(PREFIX foaf: <http://xmlns.com/foaf/0.1/>

SELECT ?name ?mbox

WHERE

{

    ?x foaf:name ?name .

    ?x foaf:mbox ?mbox .

}
)";
  require(parse_sparql(foaf).where.size() == 2, "foaf sample did not parse to 2 patterns");
}

// 6. Round trips.
void round_trips() {
  testing::Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    SparqlQuery q = testing::random_query(rng);
    require(parse_sparql(serialize(q)) == q, "query round trip " + std::to_string(i) + " differs");
  }
  for (int i = 0; i < 500; ++i) {
    QueryDocument d = testing::random_document(rng);
    require(load_document(save_document(d)) == d, "document round trip " + std::to_string(i) + " differs");
  }
}

// 7. Evaluator against brute force.
void evaluator_oracle() {
  testing::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    TripleStore store = testing::random_store(rng, 50);
    SparqlQuery q = testing::random_small_query(rng);
    require(testing::table_rows(evaluate(q, store)) == testing::brute_force_rows(q, store),
            "case " + std::to_string(i) + " disagrees with the oracle:\n" + serialize(q));
  }
}

// 8. Node cap.
void node_cap() {
  for (std::size_t cap : {std::size_t{1}, std::size_t{12}}) {
    QueryGraph g(cap);
    for (std::size_t i = 0; i < cap; ++i) g.add_node(NodeKind::Variable, "?v" + std::to_string(i));
    QueryGraph before = g;
    bool rejected = false;
    try {
      g.add_node(NodeKind::Variable, "?extra");
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::CapExceeded;
    }
    require(rejected, "node " + std::to_string(cap + 1) + " was not rejected at cap " + std::to_string(cap));
    require(g == before, "graph changed after a rejected add at cap " + std::to_string(cap));
  }
  require(QueryGraph().node_cap() == 12, "default cap is not 12");
}

// 9. Validation.
void validation() {
  const Ontology& o = sensor_ontology();
  auto error_codes = [](const std::vector<Diagnostic>& ds) {
    std::set<std::string> codes;
    for (const auto& d : ds) {
      if (d.severity == Severity::Error) codes.insert(d.code);
    }
    return codes;
  };
  auto blocks_translation = [&o](const QueryGraph& g) {
    try {
      translate(g, o);
    } catch (const ValidationFailed&) {
      return true;
    }
    return false;
  };

  QueryGraph unknown_property;
  NodeId x = unknown_property.add_node(NodeKind::Variable, "?x");
  NodeId y = unknown_property.add_node(NodeKind::Variable, "?y");
  unknown_property.add_edge(x, y, "tp:hasNothing");
  unknown_property.set_selected({"?y"});
  require(error_codes(validate(unknown_property, o, true)) == std::set<std::string>{"UNKNOWN_PROPERTY"},
          "unknown property not reported as UNKNOWN_PROPERTY");
  require(blocks_translation(unknown_property), "unknown property did not block translation");

  QueryGraph unknown_class;
  x = unknown_class.add_node(NodeKind::Variable, "?x");
  NodeId c = unknown_class.add_node(NodeKind::ClassTerm, "tp:Dragon");
  unknown_class.add_edge(x, c, "tp:hasLocation");
  unknown_class.set_selected({"?x"});
  require(error_codes(validate(unknown_class, o, true)) == std::set<std::string>{"UNKNOWN_CLASS"},
          "unknown class not reported as UNKNOWN_CLASS");
  require(blocks_translation(unknown_class), "unknown class did not block translation");

  for (const char* name : {"experiment1", "experiment2", "alarm"}) {
    auto ds = validate(testing::fixture_document(name).graph, o, true);
    require(error_codes(ds).empty(), std::string(name) + " has validation errors");
  }
}

}  // namespace
}  // namespace oqb

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<void()> check;
  };
  const Criterion criteria[] = {
      {1, "ontology reading", oqb::ontology_reading},
      {2, "experiment 1 translation and execution", oqb::experiment1},
      {3, "experiment 2 translation and execution", oqb::experiment2},
      {4, "alarm scenario", oqb::alarm},
      {5, "SPARQL syntax conformance", oqb::syntax_conformance},
      {6, "round-trip properties", oqb::round_trips},
      {7, "evaluator matches brute-force oracle", oqb::evaluator_oracle},
      {8, "node cap", oqb::node_cap},
      {9, "validation codes", oqb::validation},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      c.check();
    } catch (const oqb::CheckFailed& f) {
      reason = f.reason;
    } catch (const std::exception& e) {
      reason = std::string("unexpected exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    if (reason.empty()) {
      std::printf("PASS criterion %d: %s (%lld ms)\n", c.number, c.title, static_cast<long long>(ms.count()));
    } else {
      ++failed;
      std::printf("FAIL criterion %d: %s (%lld ms): %s\n", c.number, c.title, static_cast<long long>(ms.count()),
                  reason.c_str());
    }
  }
  return failed == 0 ? 0 : 1;
}
