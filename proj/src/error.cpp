// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include "oqb/error.hpp"

#include <algorithm>
#include <sstream>

namespace oqb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidIri: return "InvalidIri";
    case ErrorCode::MalformedXml: return "MalformedXml";
    case ErrorCode::NotAnOntology: return "NotAnOntology";
    case ErrorCode::CyclicSubclass: return "CyclicSubclass";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::UnknownPrefix: return "UnknownPrefix";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BadVariableName: return "BadVariableName";
    case ErrorCode::BadPayload: return "BadPayload";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::VersionUnsupported: return "VersionUnsupported";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::OntologyMissing: return "OntologyMissing";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::SessionNotFound: return "SessionNotFound";
    case ErrorCode::BadRequest: return "BadRequest";
  }
  return "Unknown";
}

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream out;
  out << to_string(d.severity) << ' ' << d.code;
  if (const auto* node = std::get_if<NodeId>(&d.subject)) {
    out << " node " << node->value;
  } else if (const auto* edge = std::get_if<EdgeIndex>(&d.subject)) {
    out << " edge " << edge->value;
  }
  if (!d.location.empty()) out << " at " << d.location;
  out << ": " << d.message;
  return out.str();
}

namespace {

std::string join_members(const std::vector<std::string>& members) {
  std::string out;
  for (const auto& m : members) {
    if (!out.empty()) out += ", ";
    out += m;
  }
  return out;
}

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  std::string out = "query graph failed validation";
  for (const auto& d : diagnostics) {
    if (d.severity != Severity::Error) continue;
    out += "; ";
    out += format_diagnostic(d);
  }
  return out;
}

}  // namespace

CyclicSubclassError::CyclicSubclassError(std::vector<std::string> members)
    : Error(ErrorCode::CyclicSubclass,
            "subclass cycle among {" + join_members(members) + "}"),
      members_(std::move(members)) {}

ValidationFailed::ValidationFailed(std::vector<Diagnostic> diagnostics)
    : Error(ErrorCode::ValidationFailed, summarize(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

PositionedError::PositionedError(ErrorCode code, const std::string& message,
                                 std::size_t line, std::size_t column)
    : Error(code, "line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

UnsupportedConstruct::UnsupportedConstruct(std::string construct,
                                           std::size_t line, std::size_t column)
    : PositionedError(ErrorCode::UnsupportedConstruct,
                      "unsupported construct " + construct, line, column),
      construct_(std::move(construct)) {}

}  // namespace oqb
