// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_IRI_HPP
#define OQB_IRI_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace oqb {

/// An absolute IRI. Construction validates: non-empty, no whitespace, and
/// either contains "://" or is a URN.
class Iri {
 public:
  explicit Iri(std::string value);

  static bool is_valid(std::string_view value);

  const std::string& str() const noexcept { return value_; }

  friend auto operator<=>(const Iri&, const Iri&) = default;
  friend bool operator==(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

/// prefix:local. The prefix may be empty (":local" uses the default
/// namespace); the local part is non-empty and holds no whitespace or ':'.
struct Curie {
  std::string prefix;
  std::string local;

  std::string str() const { return prefix + ":" + local; }

  /// Splits "p:local". Returns nullopt for anything that is not CURIE shaped,
  /// including full IRIs such as "http://...".
  static std::optional<Curie> parse(std::string_view text);

  friend bool operator==(const Curie&, const Curie&) = default;
};

/// True when `local` can be emitted after "prefix:" in SPARQL text and read
/// back unchanged: [A-Za-z_][A-Za-z0-9_-]*.
bool is_safe_local_name(std::string_view local);

/// True for prefixes usable in SPARQL PREFIX declarations: empty or
/// [A-Za-z][A-Za-z0-9_-]*.
bool is_safe_prefix(std::string_view prefix);

/// Prefix -> namespace IRI. Every namespace ends in '#' or '/'.
class NamespaceTable {
 public:
  using Map = std::map<std::string, Iri>;

  /// Returns false (and leaves the table unchanged) when the prefix is taken
  /// or the namespace does not end in '#' or '/'.
  bool add(std::string prefix, const Iri& ns);

  const Iri* find(std::string_view prefix) const;
  bool contains(std::string_view prefix) const { return find(prefix) != nullptr; }

  /// Expands a CURIE; nullopt when the prefix is unknown.
  std::optional<Iri> expand(const Curie& curie) const;

  /// Shortest CURIE for `iri`: longest matching namespace wins, a non-empty
  /// prefix is preferred over the default one, then the lexicographically
  /// smallest prefix. Only safe local names are produced.
  std::optional<Curie> compact(const Iri& iri) const;

  const Map& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const NamespaceTable&, const NamespaceTable&) = default;

 private:
  Map entries_;
};

/// Renders `iri` as a CURIE when the table covers it, else as "<iri>".
std::string display_iri(const NamespaceTable& ns, const Iri& iri);

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kXml = "http://www.w3.org/XML/1998/namespace";
}  // namespace vocab

}  // namespace oqb

#endif  // OQB_IRI_HPP
