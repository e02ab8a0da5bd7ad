// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include "oqb/triple_store.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <optional>

#include "oqb/error.hpp"

namespace oqb {

RdfTerm to_rdf_term(const ObjectTerm& term) {
  if (const auto* iri = std::get_if<Iri>(&term)) return *iri;
  return std::get<Literal>(term);
}

TripleStore::TripleStore(const TripleStore& other) : triples_(other.triples_) { rebuild_indexes(); }

TripleStore& TripleStore::operator=(const TripleStore& other) {
  if (this != &other) {
    triples_ = other.triples_;
    rebuild_indexes();
  }
  return *this;
}

void TripleStore::rebuild_indexes() {
  by_subject_.clear();
  by_predicate_.clear();
  by_object_.clear();
  for (const auto& t : triples_) index(&t);
}

void TripleStore::index(const GroundTriple* t) {
  by_subject_[t->subject].insert(t);
  by_predicate_[t->predicate].insert(t);
  by_object_[t->object].insert(t);
}

void TripleStore::unindex(const GroundTriple* t) {
  auto drop = [t](auto& map, const auto& key) {
    auto it = map.find(key);
    it->second.erase(t);
    if (it->second.empty()) map.erase(it);
  };
  drop(by_subject_, t->subject);
  drop(by_predicate_, t->predicate);
  drop(by_object_, t->object);
}

bool TripleStore::insert(const GroundTriple& t) {
  auto [it, inserted] = triples_.insert(t);
  if (inserted) index(&*it);
  return inserted;
}

bool TripleStore::remove(const GroundTriple& t) {
  auto it = triples_.find(t);
  if (it == triples_.end()) return false;
  unindex(&*it);
  triples_.erase(it);
  return true;
}

std::vector<const GroundTriple*> TripleStore::match(const Iri* subject, const Iri* predicate,
                                                    const ObjectTerm* object) const {
  static const Bucket kEmpty;
  const Bucket* bucket = nullptr;
  auto consider = [&bucket](const auto& map, const auto* key) {
    if (key == nullptr) return;
    auto it = map.find(*key);
    const Bucket* candidate = it == map.end() ? &kEmpty : &it->second;
    if (bucket == nullptr || candidate->size() < bucket->size()) bucket = candidate;
  };
  consider(by_subject_, subject);
  consider(by_object_, object);
  consider(by_predicate_, predicate);

  std::vector<const GroundTriple*> out;
  auto accept = [&](const GroundTriple& t) {
    if (subject != nullptr && t.subject != *subject) return;
    if (predicate != nullptr && t.predicate != *predicate) return;
    if (object != nullptr && t.object != *object) return;
    out.push_back(&t);
  };
  if (bucket == nullptr) {
    for (const auto& t : triples_) accept(t);
  } else {
    for (const auto* t : *bucket) accept(*t);
  }
  return out;
}

// N-Triples -----------------------------------------------------------------

namespace {

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t line_no) : s_(line), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw PositionedError(ErrorCode::ParseError, message, line_no_, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  Iri iri() {
    skip_space();
    if (peek() == '_' ) fail("blank nodes are not supported");
    if (peek() != '<') fail("expected '<'");
    auto close = s_.find('>', pos_);
    if (close == std::string_view::npos) fail("unterminated IRI");
    std::string value(s_.substr(pos_ + 1, close - pos_ - 1));
    if (!Iri::is_valid(value)) fail("'" + value + "' is not an absolute IRI");
    pos_ = close + 1;
    return Iri(std::move(value));
  }

  ObjectTerm object() {
    skip_space();
    if (peek() != '"') return iri();
    ++pos_;
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated literal");
      char c = s_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        out += c;
        continue;
      }
      if (at_end()) fail("unterminated literal");
      char e = s_[pos_++];
      switch (e) {
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        default: fail(std::string("unsupported escape '\\") + e + "'");
      }
    }
    if (peek() == '^') fail("datatyped literals are not supported");
    if (peek() == '@') fail("language-tagged literals are not supported");
    return Literal{std::move(out)};
  }

  void terminator() {
    skip_space();
    if (peek() != '.') fail("expected '.' at end of triple");
    ++pos_;
    skip_space();
    if (!at_end() && peek() != '#') fail("unexpected text after '.'");
  }

 private:
  std::string_view s_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

TripleStore load_ntriples(std::string_view document) {
  TripleStore store;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= document.size()) {
    auto end = document.find('\n', start);
    if (end == std::string_view::npos) end = document.size();
    std::string_view line = document.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;

    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == document.size()) break;
      continue;
    }
    LineReader reader(line, line_no);
    Iri s = reader.iri();
    Iri p = reader.iri();
    ObjectTerm o = reader.object();
    reader.terminator();
    store.insert({std::move(s), std::move(p), std::move(o)});
    if (end == document.size()) break;
  }
  return store;
}

TripleStore load_ntriples(std::istream& document) {
  std::string text((std::istreambuf_iterator<char>(document)), std::istreambuf_iterator<char>());
  return load_ntriples(std::string_view(text));
}

std::string to_ntriples(const TripleStore& store) {
  std::string out;
  for (const auto& t : store.triples()) {
    out += "<" + t.subject.str() + "> <" + t.predicate.str() + "> " +
           term_to_ntriples(to_rdf_term(t.object)) + " .\n";
  }
  return out;
}

// Evaluation ----------------------------------------------------------------

namespace {

class Evaluator {
 public:
  Evaluator(const SparqlQuery& q, const TripleStore& store) : q_(q), store_(store) {
    for (const auto& p : q.where) {
      for (const RdfTerm* t : {&p.subject, &p.predicate, &p.object}) {
        if (const auto* v = std::get_if<Variable>(t)) slot(v->name);
      }
    }
    binding_.resize(slots_.size());
  }

  BindingTable run() {
    join(0);
    BindingTable table{q_.select, {}};
    table.rows.reserve(solutions_.size());
    for (auto& [key, row] : solutions_) table.rows.push_back(std::move(row));
    return table;
  }

 private:
  std::size_t slot(const std::string& name) {
    auto it = std::find(slots_.begin(), slots_.end(), name);
    if (it != slots_.end()) return static_cast<std::size_t>(it - slots_.begin());
    slots_.push_back(name);
    return slots_.size() - 1;
  }

  std::size_t slot_of(const std::string& name) const {
    return static_cast<std::size_t>(std::find(slots_.begin(), slots_.end(), name) - slots_.begin());
  }

  // Current value of a pattern position: the constant, the bound value, or
  // nullopt for a free variable.
  std::optional<RdfTerm> value_of(const RdfTerm& t) const {
    if (const auto* v = std::get_if<Variable>(&t)) return binding_[slot_of(v->name)];
    return t;
  }

  // Binds a free variable or checks a bound/constant one. Returns false on
  // conflict.
  bool unify(const RdfTerm& position, const RdfTerm& value, std::vector<std::size_t>& newly_bound) {
    const auto* v = std::get_if<Variable>(&position);
    if (v == nullptr) return position == value;
    auto& cell = binding_[slot_of(v->name)];
    if (cell.has_value()) return *cell == value;
    cell = value;
    newly_bound.push_back(slot_of(v->name));
    return true;
  }

  void join(std::size_t index) {
    if (index == q_.where.size()) {
      record();
      return;
    }
    const TriplePattern& p = q_.where[index];
    auto s = value_of(p.subject);
    auto pr = value_of(p.predicate);
    auto o = value_of(p.object);

    const Iri* s_iri = nullptr;
    if (s) {
      s_iri = std::get_if<Iri>(&*s);
      if (s_iri == nullptr) return;  // literals never occur as subjects
    }
    const Iri* p_iri = nullptr;
    if (pr) {
      p_iri = std::get_if<Iri>(&*pr);
      if (p_iri == nullptr) return;
    }
    std::optional<ObjectTerm> o_term;
    if (o) {
      if (const auto* iri = std::get_if<Iri>(&*o)) {
        o_term = *iri;
      } else if (const auto* lit = std::get_if<Literal>(&*o)) {
        o_term = *lit;
      }
    }

    for (const GroundTriple* t : store_.match(s_iri, p_iri, o_term ? &*o_term : nullptr)) {
      std::vector<std::size_t> newly_bound;
      bool ok = unify(p.subject, t->subject, newly_bound) &&
                unify(p.predicate, t->predicate, newly_bound) &&
                unify(p.object, to_rdf_term(t->object), newly_bound);
      if (ok) join(index + 1);
      for (auto slot : newly_bound) binding_[slot].reset();
    }
  }

  void record() {
    std::vector<std::string> key;
    std::vector<RdfTerm> row;
    key.reserve(q_.select.size());
    row.reserve(q_.select.size());
    for (const auto& name : q_.select) {
      const RdfTerm& value = *binding_[slot_of(name)];
      key.push_back(term_to_ntriples(value));
      row.push_back(value);
    }
    solutions_.emplace(std::move(key), std::move(row));
  }

  const SparqlQuery& q_;
  const TripleStore& store_;
  std::vector<std::string> slots_;
  std::vector<std::optional<RdfTerm>> binding_;
  std::map<std::vector<std::string>, std::vector<RdfTerm>> solutions_;
};

}  // namespace

BindingTable evaluate(const SparqlQuery& q, const TripleStore& store) {
  check_query(q);
  return Evaluator(q, store).run();
}

}  // namespace oqb
