// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_TESTS_TEST_PATHS_HPP
#define OQB_TESTS_TEST_PATHS_HPP

#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "oqb/document.hpp"
#include "oqb/ontology.hpp"
#include "oqb/triple_store.hpp"

namespace oqb::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(OQB_FIXTURE_DIR) / name;
}

inline std::filesystem::path test_data(const std::string& name) {
  return std::filesystem::path(OQB_TEST_DATA_DIR) / name;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline const Ontology& sensor_ontology() {
  static const Ontology o = load_ontology_file(fixture("sensor.owl"));
  return o;
}

inline const TripleStore& registry() {
  static const TripleStore s = load_ntriples(read_text(fixture("registry.nt")));
  return s;
}

inline QueryDocument fixture_document(const std::string& name) {
  return load_document_file(fixture(name + ".oqb"));
}

inline std::string golden(const std::string& name) { return read_text(fixture("golden/" + name)); }

inline const std::string kTp = "http://topps.example.org/sensor#";

inline Iri tp(const std::string& local) { return Iri(kTp + local); }

}  // namespace oqb::testing

#endif  // OQB_TESTS_TEST_PATHS_HPP
