// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_ONTOLOGY_HPP
#define OQB_ONTOLOGY_HPP

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oqb/diagnostic.hpp"
#include "oqb/iri.hpp"

namespace oqb {

struct ClassDef {
  Iri iri;
  std::optional<std::string> label;
  std::set<Iri> parents;  // direct superclasses

  friend bool operator==(const ClassDef&, const ClassDef&) = default;
};

enum class PropertyKind { Object, Datatype };

std::string_view to_string(PropertyKind kind);

struct PropertyDef {
  Iri iri;
  PropertyKind kind = PropertyKind::Object;
  std::optional<std::string> label;
  std::set<Iri> domains;
  std::set<Iri> ranges;  // class IRIs for Object, XSD datatypes for Datatype

  friend bool operator==(const PropertyDef&, const PropertyDef&) = default;
};

/// Immutable catalog of the named classes and properties of an OWL ontology.
/// Only parse_ontology builds one; afterwards it is safe to share between
/// threads.
class Ontology {
 public:
  const NamespaceTable& namespaces() const noexcept { return namespaces_; }
  const std::map<Iri, ClassDef>& classes() const noexcept { return classes_; }
  const std::map<Iri, PropertyDef>& properties() const noexcept { return properties_; }
  const std::string& source_name() const noexcept { return source_name_; }
  /// Namespace derived from xml:base (or the source name when absent).
  const std::optional<Iri>& base_namespace() const noexcept { return base_namespace_; }
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }
  std::size_t anonymous_skipped() const noexcept { return anonymous_skipped_; }

  const ClassDef* find_class(const Iri& iri) const;
  const PropertyDef* find_property(const Iri& iri) const;

  /// True when `cls` equals `ancestor` or reaches it through subClassOf.
  bool is_subclass_or_same(const Iri& cls, const Iri& ancestor) const;

  friend bool operator==(const Ontology&, const Ontology&) = default;

 private:
  friend class OntologyBuilder;

  NamespaceTable namespaces_;
  std::map<Iri, ClassDef> classes_;
  std::map<Iri, PropertyDef> properties_;
  std::string source_name_;
  std::optional<Iri> base_namespace_;
  std::vector<Diagnostic> diagnostics_;
  std::size_t anonymous_skipped_ = 0;
};

/// Parses an RDF/XML OWL document.
///
/// Extracts every named owl:Class, every rdfs:subClassOf edge to a named
/// class, every owl:ObjectProperty / owl:DatatypeProperty with its
/// rdfs:domain and rdfs:range, and the namespace prefixes declared in the
/// document plus its base namespace. Anonymous class expressions are skipped
/// and counted; plain rdf:Property declarations load as object properties.
///
/// Throws Error(MalformedXml), Error(NotAnOntology) or CyclicSubclassError.
Ontology parse_ontology(std::string_view document, std::string source_name);
Ontology parse_ontology(std::istream& document, std::string source_name);

/// Reads and parses a file; the source name is the file name. Throws
/// Error(IoFailure) when the file cannot be read.
Ontology load_ontology_file(const std::filesystem::path& path);

/// All classes, sorted by IRI.
std::vector<ClassDef> list_classes(const Ontology& o);

/// All properties, sorted by IRI.
std::vector<PropertyDef> list_properties(const Ontology& o);

/// Direct children, or every descendant when `transitive`. Never contains
/// `cls` itself. Throws Error(UnknownClass).
std::set<Iri> subclasses_of(const Ontology& o, const Iri& cls, bool transitive);

/// Expands a CURIE through the ontology's namespaces; full IRIs (optionally
/// wrapped in <>) pass through. Throws Error(UnknownPrefix).
Iri resolve(const Ontology& o, std::string_view name);

/// Non-throwing resolve.
std::optional<Iri> try_resolve(const Ontology& o, std::string_view name);

/// Shortest name for display: a CURIE when a namespace covers the IRI,
/// otherwise the bare IRI.
std::string short_name(const Ontology& o, const Iri& iri);

}  // namespace oqb

#endif  // OQB_ONTOLOGY_HPP
