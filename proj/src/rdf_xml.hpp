// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_SRC_RDF_XML_HPP
#define OQB_SRC_RDF_XML_HPP

#include <string>
#include <string_view>
#include <vector>

namespace oqb::detail {

struct RdfNode {
  enum class Kind { Iri, Blank, Literal };

  Kind kind = Kind::Iri;
  std::string value;     // IRI, "_:label" or lexical form
  std::string datatype;  // literals only
  std::string lang;      // literals only

  bool is_iri() const { return kind == Kind::Iri; }
  bool is_blank() const { return kind == Kind::Blank; }
  bool is_literal() const { return kind == Kind::Literal; }
};

struct RdfStatement {
  RdfNode subject;
  std::string predicate;
  RdfNode object;
  long line = 0;
};

struct NamespaceDecl {
  std::string prefix;  // "" for the default namespace
  std::string uri;
  long line = 0;
};

struct RdfXmlDocument {
  std::vector<RdfStatement> statements;
  std::vector<NamespaceDecl> namespaces;
  std::string base;  // effective base of the document element
};

/// Reads RDF/XML into a flat statement list. `default_base` is used when the
/// document element carries no xml:base. Throws Error(MalformedXml).
RdfXmlDocument read_rdf_xml(std::string_view text, const std::string& default_base);

/// Resolves `ref` against `base` (RFC 3986 reference resolution without
/// dot-segment removal).
std::string resolve_reference(const std::string& base, const std::string& ref);

}  // namespace oqb::detail

#endif  // OQB_SRC_RDF_XML_HPP
