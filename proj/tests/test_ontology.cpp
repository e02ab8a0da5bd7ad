// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdlib>

#include "oqb/error.hpp"
#include "oqb/ontology.hpp"
#include "support/test_paths.hpp"

namespace oqb {
namespace {

using testing::fixture;
using testing::sensor_ontology;
using testing::test_data;
using testing::tp;

std::set<Iri> tps(std::initializer_list<const char*> locals) {
  std::set<Iri> out;
  for (const char* l : locals) out.insert(tp(l));
  return out;
}

TEST(SensorOntology, ClassesAndHierarchy) {
  const Ontology& o = sensor_ontology();
  EXPECT_EQ(o.classes().size(), 10u);
  std::map<std::string, std::set<Iri>> expected_parents = {
      {"Sensor", {}},          {"CameraSensor", tps({"Sensor"})}, {"MotionDetector", tps({"Sensor"})},
      {"Data", {}},            {"Image", tps({"Data"})},          {"Video", tps({"Data"})},
      {"Audio", tps({"Data"})}, {"Location", {}},                 {"Room", tps({"Location"})},
      {"Binary", {}}};
  for (const auto& [local, parents] : expected_parents) {
    const ClassDef* c = o.find_class(tp(local));
    ASSERT_NE(c, nullptr) << local;
    EXPECT_EQ(c->parents, parents) << local;
  }
  EXPECT_EQ(o.find_class(tp("CameraSensor"))->label, "Camera Sensor");
}

TEST(SensorOntology, Properties) {
  const Ontology& o = sensor_ontology();
  EXPECT_EQ(o.properties().size(), 7u);
  for (const char* p : {"hasCameraResource", "hasResourceType", "has_resource"}) {
    const PropertyDef* d = o.find_property(tp(p));
    ASSERT_NE(d, nullptr) << p;
    EXPECT_EQ(d->kind, PropertyKind::Object);
    EXPECT_EQ(d->domains, tps({"CameraSensor"}));
    EXPECT_EQ(d->ranges, tps({"Data"}));
  }
  for (const char* p : {"hasLocation", "has_location"}) {
    const PropertyDef* d = o.find_property(tp(p));
    ASSERT_NE(d, nullptr) << p;
    EXPECT_EQ(d->domains, tps({"Sensor"}));
    EXPECT_EQ(d->ranges, tps({"Location"}));
  }
  EXPECT_EQ(o.find_property(tp("get_detection"))->kind, PropertyKind::Datatype);
  EXPECT_EQ(o.find_property(tp("has_uri"))->kind, PropertyKind::Datatype);
  EXPECT_EQ(o.find_property(tp("get_detection"))->ranges,
            std::set<Iri>{Iri("http://www.w3.org/2001/XMLSchema#boolean")});
}

TEST(SensorOntology, NoDiagnosticsAndTpPrefix) {
  const Ontology& o = sensor_ontology();
  EXPECT_TRUE(o.diagnostics().empty());
  ASSERT_TRUE(o.namespaces().contains("tp"));
  EXPECT_EQ(o.namespaces().find("tp")->str(), testing::kTp);
  EXPECT_EQ(o.source_name(), "sensor.owl");
}

TEST(SensorOntology, ReparseIsDeterministic) {
  std::string text = testing::read_text(fixture("sensor.owl"));
  Ontology first = parse_ontology(text, "sensor.owl");
  for (int i = 0; i < 20; ++i) EXPECT_EQ(parse_ontology(text, "sensor.owl"), first);
}

TEST(Subclasses, DirectAndTransitive) {
  const Ontology& o = sensor_ontology();
  EXPECT_EQ(subclasses_of(o, tp("Sensor"), true), tps({"CameraSensor", "MotionDetector"}));
  EXPECT_EQ(subclasses_of(o, tp("Data"), false), tps({"Image", "Video", "Audio"}));
  EXPECT_TRUE(subclasses_of(o, tp("Binary"), true).empty());
  try {
    subclasses_of(o, tp("Dragon"), true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownClass);
  }
}

TEST(Subclasses, TransitiveChain) {
  Ontology o = load_ontology_file(test_data("pizza_style.owl"));
  const std::string ns = "http://www.co-ode.org/ontologies/pizza/pizza.owl#";
  auto direct = subclasses_of(o, Iri(ns + "Pizza"), false);
  auto all = subclasses_of(o, Iri(ns + "Pizza"), true);
  EXPECT_EQ(direct, std::set<Iri>{Iri(ns + "NamedPizza")});
  EXPECT_EQ(all, (std::set<Iri>{Iri(ns + "NamedPizza"), Iri(ns + "Margherita")}));
  EXPECT_TRUE(o.is_subclass_or_same(Iri(ns + "Margherita"), Iri(ns + "Food")));
  EXPECT_FALSE(o.is_subclass_or_same(Iri(ns + "Food"), Iri(ns + "Pizza")));
}

TEST(Resolve, CurieAndIri) {
  const Ontology& o = sensor_ontology();
  EXPECT_EQ(resolve(o, "tp:Image"), tp("Image"));
  EXPECT_EQ(resolve(o, "<http://x.example/y>"), Iri("http://x.example/y"));
  EXPECT_EQ(resolve(o, "http://x.example/y"), Iri("http://x.example/y"));
  try {
    resolve(o, "zz:Image");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownPrefix);
  }
  EXPECT_EQ(short_name(o, tp("Image")), "tp:Image");
}

TEST(ParseOntology, MalformedXmlReportsPosition) {
  try {
    load_ontology_file(test_data("truncated.owl"));
    FAIL();
  } catch (const PositionedError& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedXml);
    EXPECT_EQ(e.line(), 5u);
  }
}

TEST(ParseOntology, NotXmlAtAll) {
  try {
    parse_ontology("just some text", "notes.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedXml);
  }
}

TEST(ParseOntology, NotAnOntology) {
  try {
    load_ontology_file(test_data("no_classes.rdf"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnOntology);
  }
}

TEST(ParseOntology, CyclicSubclassNamesCycleMembers) {
  try {
    load_ontology_file(test_data("cyclic.owl"));
    FAIL();
  } catch (const CyclicSubclassError& e) {
    EXPECT_EQ(e.code(), ErrorCode::CyclicSubclass);
    EXPECT_EQ(e.members(), (std::vector<std::string>{"http://cycle.example/o#A", "http://cycle.example/o#B",
                                                     "http://cycle.example/o#C"}));
  }
}

TEST(ParseOntology, MissingFileIsIoFailure) {
  try {
    load_ontology_file(test_data("does_not_exist.owl"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoFailure);
  }
}

TEST(ParseOntology, PizzaStyleFeatures) {
  Ontology o = load_ontology_file(test_data("pizza_style.owl"));
  const std::string ns = "http://www.co-ode.org/ontologies/pizza/pizza.owl#";
  // rdf:ID and rdf:about with xml:base, entity-expanded IRIs.
  ASSERT_NE(o.find_class(Iri(ns + "Pizza")), nullptr);
  ASSERT_NE(o.find_property(Iri(ns + "hasBase")), nullptr);
  EXPECT_EQ(o.find_property(Iri(ns + "hasCalorificContentValue"))->kind, PropertyKind::Datatype);
  // English label preferred; owl:Thing parent dropped; restriction skipped.
  EXPECT_EQ(o.find_class(Iri(ns + "Pizza"))->label, "Pizza");
  EXPECT_EQ(o.find_class(Iri(ns + "Pizza"))->parents, std::set<Iri>{Iri(ns + "Food")});
  EXPECT_EQ(o.find_class(Iri(ns + "PizzaTopping"))->parents, std::set<Iri>{Iri(ns + "Food")});
  EXPECT_EQ(o.anonymous_skipped(), 2u);
  // Undeclared parent becomes an implicit class with a warning.
  EXPECT_NE(o.find_class(Iri(ns + "Spiciness")), nullptr);
  bool saw_implicit = false;
  for (const auto& d : o.diagnostics()) {
    EXPECT_EQ(d.severity, Severity::Warning);
    if (d.code == "IMPLICIT_CLASS") saw_implicit = true;
  }
  EXPECT_TRUE(saw_implicit);
  // Base namespace registered under the empty prefix.
  EXPECT_EQ(short_name(o, Iri(ns + "Pizza")), ":Pizza");
}

TEST(ParseOntology, WarningsForOddDeclarations) {
  const char* text = R"(<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
         xmlns:owl="http://www.w3.org/2002/07/owl#"
         xmlns:bad="http://bad.example/noseparator"
         xmlns:ex="http://w.example/">
  <owl:Class rdf:about="http://w.example/A"><rdfs:subClassOf rdf:resource="http://w.example/A"/></owl:Class>
  <rdf:Property rdf:about="http://w.example/plain"/>
  <owl:ObjectProperty rdf:about="http://w.example/both">
    <rdf:type rdf:resource="http://www.w3.org/2002/07/owl#DatatypeProperty"/>
  </owl:ObjectProperty>
  <owl:ObjectProperty rdf:about="http://w.example/p">
    <rdfs:range rdf:resource="http://www.w3.org/2001/XMLSchema#string"/>
    <rdfs:domain rdf:resource="http://w.example/Nowhere"/>
  </owl:ObjectProperty>
  <owl:DatatypeProperty rdf:about="http://w.example/d">
    <rdfs:range rdf:resource="http://w.example/A"/>
  </owl:DatatypeProperty>
  <owl:Class rdf:about="http://w.example/both2"/>
  <owl:ObjectProperty rdf:about="http://w.example/both2"/>
  <rdf:Description rdf:about="http://w.example/ghost">
    <rdfs:domain rdf:resource="http://w.example/A"/>
  </rdf:Description>
</rdf:RDF>)";
  Ontology o = parse_ontology(text, "odd.owl");
  std::set<std::string> codes;
  for (const auto& d : o.diagnostics()) {
    EXPECT_EQ(d.severity, Severity::Warning) << format_diagnostic(d);
    codes.insert(d.code);
  }
  for (const char* c : {"SELF_SUBCLASS", "RDF_PROPERTY", "CONFLICTING_PROPERTY_KIND",
                        "DATATYPE_RANGE_ON_OBJECT_PROPERTY", "DANGLING_REFERENCE", "NON_XSD_RANGE",
                        "PUNNED_ENTITY", "BAD_NAMESPACE", "UNDECLARED_PROPERTY"}) {
    EXPECT_TRUE(codes.count(c)) << c;
  }
  EXPECT_EQ(o.find_property(Iri("http://w.example/both"))->kind, PropertyKind::Object);
  EXPECT_TRUE(o.find_property(Iri("http://w.example/p"))->ranges.empty());
  EXPECT_TRUE(o.find_property(Iri("http://w.example/d"))->ranges.empty());
  EXPECT_NE(o.find_class(Iri("http://w.example/both2")), nullptr);
  EXPECT_EQ(o.find_property(Iri("http://w.example/both2")), nullptr);
}

TEST(ParseOntology, ListingsAreSorted) {
  const Ontology& o = sensor_ontology();
  auto classes = list_classes(o);
  EXPECT_TRUE(std::is_sorted(classes.begin(), classes.end(),
                             [](const ClassDef& a, const ClassDef& b) { return a.iri < b.iri; }));
  auto props = list_properties(o);
  EXPECT_TRUE(std::is_sorted(props.begin(), props.end(),
                             [](const PropertyDef& a, const PropertyDef& b) { return a.iri < b.iri; }));
}

// Runs against a locally provided copy of the Protege pizza ontology.
TEST(ParseOntology, ExternalPizzaOntology) {
  const char* path = std::getenv("OQB_PIZZA_OWL");
  if (path == nullptr || *path == '\0') GTEST_SKIP() << "set OQB_PIZZA_OWL to run";
  Ontology o = load_ontology_file(path);
  EXPECT_FALSE(has_errors(o.diagnostics()));
  bool has_pizza = false;
  for (const auto& [iri, c] : o.classes()) {
    if (iri.str().size() >= 6 && iri.str().substr(iri.str().size() - 6) == "#Pizza") has_pizza = true;
  }
  EXPECT_TRUE(has_pizza);
  EXPECT_GT(o.properties().size(), 0u);
}

}  // namespace
}  // namespace oqb
