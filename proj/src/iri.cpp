// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include "oqb/iri.hpp"

#include <algorithm>
#include <cctype>

#include "oqb/error.hpp"

namespace oqb {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_alpha(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool ends_with_separator(std::string_view s) {
  return !s.empty() && (s.back() == '#' || s.back() == '/');
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) {
    throw Error(ErrorCode::InvalidIri, "not an absolute IRI: '" + value_ + "'");
  }
}

bool Iri::is_valid(std::string_view value) {
  if (value.empty()) return false;
  if (std::any_of(value.begin(), value.end(), is_space)) return false;
  if (value.find("://") != std::string_view::npos) return true;
  return value.size() > 4 && (value.substr(0, 4) == "urn:" || value.substr(0, 4) == "URN:");
}

std::optional<Curie> Curie::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  std::string_view prefix = text.substr(0, colon);
  std::string_view local = text.substr(colon + 1);
  if (local.empty() || std::count(local.begin(), local.end(), ':') != 0) return std::nullopt;
  if (local.substr(0, 2) == "//") return std::nullopt;
  if (std::any_of(text.begin(), text.end(), is_space)) return std::nullopt;
  if (std::any_of(prefix.begin(), prefix.end(),
                  [](char c) { return c == '<' || c == '>' || c == '/' || c == '#'; })) {
    return std::nullopt;
  }
  return Curie{std::string(prefix), std::string(local)};
}

bool is_safe_local_name(std::string_view local) {
  if (local.empty()) return false;
  if (!is_alpha(local.front()) && local.front() != '_') return false;
  return std::all_of(local.begin(), local.end(),
                     [](char c) { return is_alnum(c) || c == '_' || c == '-'; });
}

bool is_safe_prefix(std::string_view prefix) {
  if (prefix.empty()) return true;
  if (!is_alpha(prefix.front())) return false;
  return std::all_of(prefix.begin(), prefix.end(),
                     [](char c) { return is_alnum(c) || c == '_' || c == '-'; });
}

bool NamespaceTable::add(std::string prefix, const Iri& ns) {
  if (!ends_with_separator(ns.str())) return false;
  if (entries_.count(prefix) != 0) return false;
  entries_.emplace(std::move(prefix), ns);
  return true;
}

const Iri* NamespaceTable::find(std::string_view prefix) const {
  auto it = entries_.find(std::string(prefix));
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<Iri> NamespaceTable::expand(const Curie& curie) const {
  const Iri* ns = find(curie.prefix);
  if (ns == nullptr) return std::nullopt;
  return Iri(ns->str() + curie.local);
}

std::optional<Curie> NamespaceTable::compact(const Iri& iri) const {
  const std::string& value = iri.str();
  const std::string* best_prefix = nullptr;
  std::size_t best_len = 0;
  for (const auto& [prefix, ns] : entries_) {
    const std::string& n = ns.str();
    if (n.size() >= value.size() || value.compare(0, n.size(), n) != 0) continue;
    if (!is_safe_prefix(prefix)) continue;
    if (!is_safe_local_name(std::string_view(value).substr(n.size()))) continue;
    bool better = false;
    if (best_prefix == nullptr || n.size() > best_len) {
      better = true;
    } else if (n.size() == best_len && best_prefix->empty() && !prefix.empty()) {
      better = true;
    }
    // Map iteration is lexicographic, so ties otherwise keep the first prefix.
    if (better) {
      best_prefix = &prefix;
      best_len = n.size();
    }
  }
  if (best_prefix == nullptr) return std::nullopt;
  return Curie{*best_prefix, value.substr(best_len)};
}

std::string display_iri(const NamespaceTable& ns, const Iri& iri) {
  if (auto curie = ns.compact(iri)) return curie->str();
  return "<" + iri.str() + ">";
}

}  // namespace oqb
