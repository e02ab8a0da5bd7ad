// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_ERROR_HPP
#define OQB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oqb/diagnostic.hpp"

namespace oqb {

enum class ErrorCode {
  InvalidIri,
  MalformedXml,
  NotAnOntology,
  CyclicSubclass,
  UnknownClass,
  UnknownPrefix,
  CapExceeded,
  BadVariableName,
  BadPayload,
  UnknownNode,
  UnknownEdge,
  SelfLoop,
  UnknownVariable,
  ValidationFailed,
  SyntaxError,
  UnsupportedConstruct,
  ParseError,
  FormatError,
  VersionUnsupported,
  IoFailure,
  OntologyMissing,
  EmptyGraph,
  SessionNotFound,
  BadRequest,
};

std::string_view to_string(ErrorCode code);

/// Base of every exception thrown by the library. The code is stable and is
/// what the CLI and the HTTP layer report to callers.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class CyclicSubclassError : public Error {
 public:
  explicit CyclicSubclassError(std::vector<std::string> members);

  /// IRIs on the detected cycle, sorted.
  const std::vector<std::string>& members() const noexcept { return members_; }

 private:
  std::vector<std::string> members_;
};

class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Error with a 1-based source position (SPARQL text, N-Triples, documents).
class PositionedError : public Error {
 public:
  PositionedError(ErrorCode code, const std::string& message, std::size_t line,
                  std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnsupportedConstruct : public PositionedError {
 public:
  UnsupportedConstruct(std::string construct, std::size_t line,
                       std::size_t column);

  const std::string& construct() const noexcept { return construct_; }

 private:
  std::string construct_;
};

}  // namespace oqb

#endif  // OQB_ERROR_HPP
