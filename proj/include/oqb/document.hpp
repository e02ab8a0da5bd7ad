// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_DOCUMENT_HPP
#define OQB_DOCUMENT_HPP

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "oqb/diagnostic.hpp"
#include "oqb/ontology.hpp"
#include "oqb/query_graph.hpp"

namespace oqb {

inline constexpr std::string_view kDocumentVersion = "1";

/// A saved query: the natural-language question, the drawn graph and the
/// SPARQL text produced for it when it was saved.
struct QueryDocument {
  std::string version{kDocumentVersion};
  std::string question;
  std::string ontology_source;
  QueryGraph graph;
  std::string sparql;

  friend bool operator==(const QueryDocument&, const QueryDocument&) = default;
};

/// Builds a document from a graph that translates cleanly under `o`; the
/// question is taken from the graph. Throws Error(EmptyGraph) for a graph
/// without nodes and ValidationFailed for an invalid one.
QueryDocument make_document(const QueryGraph& g, const Ontology& o);

/// Writes the canonical `.oqb` text. Equal documents give identical bytes.
/// Throws Error(IoFailure) when the sink fails.
void save_document(const QueryDocument& d, std::ostream& sink);
std::string save_document(const QueryDocument& d);

/// Inverse of save_document. Throws PositionedError(FormatError) or
/// Error(VersionUnsupported). `node_cap` overrides the cap stored in the
/// file when non-zero (a graph with more nodes then fails with CapExceeded).
QueryDocument load_document(std::istream& source, std::size_t node_cap = 0);
QueryDocument load_document(std::string_view text, std::size_t node_cap = 0);
QueryDocument load_document_file(const std::filesystem::path& path, std::size_t node_cap = 0);

/// Re-derives the SPARQL for the stored graph under `o` and reports a
/// SPARQL_MISMATCH warning when it differs from the stored text, plus the
/// graph's validation diagnostics.
std::vector<Diagnostic> check_document(const QueryDocument& d, const Ontology& o);

/// Legacy flat text: "# Question: <question>" then the SPARQL text. This
/// format is write-only.
void export_plain(const QueryDocument& d, std::ostream& sink);
std::string export_plain(const QueryDocument& d);

}  // namespace oqb

#endif  // OQB_DOCUMENT_HPP
