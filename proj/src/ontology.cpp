// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include "oqb/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "oqb/error.hpp"
#include "rdf_xml.hpp"

namespace oqb {

using detail::RdfNode;
using detail::RdfStatement;

std::string_view to_string(PropertyKind kind) {
  return kind == PropertyKind::Object ? "object" : "datatype";
}

namespace {

const std::string kRdf(vocab::kRdf);
const std::string kRdfs(vocab::kRdfs);
const std::string kOwl(vocab::kOwl);
const std::string kXsd(vocab::kXsd);

const std::string kType = kRdf + "type";
const std::string kSubClassOf = kRdfs + "subClassOf";
const std::string kDomain = kRdfs + "domain";
const std::string kRange = kRdfs + "range";
const std::string kLabel = kRdfs + "label";
const std::string kOwlClass = kOwl + "Class";
const std::string kOwlThing = kOwl + "Thing";
const std::string kOwlRestriction = kOwl + "Restriction";
const std::string kObjectProperty = kOwl + "ObjectProperty";
const std::string kDatatypeProperty = kOwl + "DatatypeProperty";
const std::string kRdfProperty = kRdf + "Property";

// OWL property characteristics that only apply to object properties.
bool is_object_property_type(const std::string& t) {
  static const std::unordered_set<std::string> kTypes = {
      kObjectProperty,
      kOwl + "TransitiveProperty",
      kOwl + "SymmetricProperty",
      kOwl + "AsymmetricProperty",
      kOwl + "InverseFunctionalProperty",
      kOwl + "ReflexiveProperty",
      kOwl + "IrreflexiveProperty",
  };
  return kTypes.count(t) != 0;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::string default_base_for(const std::string& source_name) {
  std::string out = "file:///";
  for (char c : source_name) {
    if (c == ' ') {
      out += "%20";
    } else if (std::isspace(static_cast<unsigned char>(c)) == 0) {
      out += c;
    }
  }
  if (source_name.empty()) out += "unnamed";
  return out;
}

}  // namespace

class OntologyBuilder {
 public:
  OntologyBuilder(std::string source_name) { o_.source_name_ = std::move(source_name); }

  Ontology build(std::string_view text) {
    auto doc = detail::read_rdf_xml(text, default_base_for(o_.source_name_));
    collect_namespaces(doc);
    collect_types(doc.statements);
    declare_entities();
    if (declared_classes_ == 0 && o_.properties_.empty()) {
      throw Error(ErrorCode::NotAnOntology,
                  o_.source_name_ + ": no owl:Class or property declarations found");
    }
    collect_relations(doc.statements);
    check_closure();
    check_acyclic();
    if (!anonymous_.empty()) {
      o_.anonymous_skipped_ = anonymous_.size();
      warn("ANONYMOUS_SKIPPED",
           "skipped " + std::to_string(anonymous_.size()) + " anonymous class expression(s)", 0);
    }
    return std::move(o_);
  }

 private:
  void warn(std::string code, std::string message, long line) {
    std::string location = o_.source_name_;
    if (line > 0) location += ":" + std::to_string(line);
    o_.diagnostics_.push_back(
        {Severity::Warning, std::move(code), std::move(message), std::move(location), {}});
  }

  void collect_namespaces(const detail::RdfXmlDocument& doc) {
    for (const auto& decl : doc.namespaces) {
      if (decl.uri == vocab::kXml) continue;
      if (!Iri::is_valid(decl.uri) || (decl.uri.back() != '#' && decl.uri.back() != '/')) {
        warn("BAD_NAMESPACE",
             "namespace '" + decl.uri + "' for prefix '" + decl.prefix +
                 "' does not end in '#' or '/'; not usable for prefixed names",
             decl.line);
        continue;
      }
      if (const Iri* existing = o_.namespaces_.find(decl.prefix)) {
        if (existing->str() != decl.uri) {
          warn("NAMESPACE_REDEFINED",
               "prefix '" + decl.prefix + "' redeclared; keeping " + existing->str(), decl.line);
        }
        continue;
      }
      o_.namespaces_.add(decl.prefix, Iri(decl.uri));
    }
    std::string base = doc.base.substr(0, doc.base.find('#'));
    if (!base.empty() && base.back() != '/') base += '#';
    if (Iri::is_valid(base)) {
      o_.base_namespace_ = Iri(base);
      if (!o_.namespaces_.contains("")) o_.namespaces_.add("", *o_.base_namespace_);
    }
  }

  void collect_types(const std::vector<RdfStatement>& statements) {
    for (const auto& st : statements) {
      if (st.predicate != kType || !st.object.is_iri()) continue;
      if (st.subject.is_blank()) {
        if (st.object.value == kOwlClass || st.object.value == kOwlRestriction) {
          anonymous_.insert(st.subject.value);
        }
        continue;
      }
      if (!st.subject.is_iri()) continue;
      auto& info = types_[st.subject.value];
      if (info.line == 0) info.line = st.line;
      info.types.insert(st.object.value);
      if (std::find(order_.begin(), order_.end(), st.subject.value) == order_.end()) {
        order_.push_back(st.subject.value);
      }
    }
    for (const auto& st : statements) {
      if (st.predicate == kLabel && st.subject.is_iri() && st.object.is_literal()) {
        auto& slot = labels_[st.subject.value];
        bool preferred = st.object.lang.empty() || starts_with(st.object.lang, "en");
        if (!slot.has_value() || (preferred && !label_preferred_[st.subject.value])) {
          slot = st.object.value;
          label_preferred_[st.subject.value] = preferred;
        }
      }
    }
  }

  std::optional<std::string> label_of(const std::string& iri) const {
    auto it = labels_.find(iri);
    return it == labels_.end() ? std::nullopt : it->second;
  }

  void declare_entities() {
    for (const auto& subject : order_) {
      const auto& info = types_.at(subject);
      bool is_class = info.types.count(kOwlClass) != 0;
      bool is_object = std::any_of(info.types.begin(), info.types.end(), is_object_property_type);
      bool is_datatype = info.types.count(kDatatypeProperty) != 0;
      bool is_rdf_property = info.types.count(kRdfProperty) != 0;
      bool is_functional = info.types.count(kOwl + "FunctionalProperty") != 0;
      bool is_property = is_object || is_datatype || is_rdf_property || is_functional;
      if (!is_class && !is_property) continue;

      if (!Iri::is_valid(subject)) {
        warn("INVALID_IRI", "skipping entity with invalid IRI '" + subject + "'", info.line);
        continue;
      }
      Iri iri(subject);
      if (is_class) {
        ++declared_classes_;
        o_.classes_.emplace(iri, ClassDef{iri, label_of(subject), {}});
        if (is_property) {
          warn("PUNNED_ENTITY", subject + " is declared both as class and property; kept as class",
               info.line);
        }
        continue;
      }
      PropertyKind kind = PropertyKind::Object;
      if (is_datatype && !is_object) {
        kind = PropertyKind::Datatype;
      } else if (is_datatype && is_object) {
        warn("CONFLICTING_PROPERTY_KIND",
             subject + " is declared both object and datatype property; treated as object",
             info.line);
      } else if (!is_object && is_rdf_property) {
        warn("RDF_PROPERTY", subject + " is a plain rdf:Property; loaded as object property",
             info.line);
      }
      o_.properties_.emplace(iri, PropertyDef{iri, kind, label_of(subject), {}, {}});
    }
  }

  ClassDef* ensure_class(const std::string& iri, long line, std::string_view why) {
    if (!Iri::is_valid(iri)) return nullptr;
    Iri key(iri);
    if (auto it = o_.classes_.find(key); it != o_.classes_.end()) return &it->second;
    if (o_.properties_.count(key) != 0) return nullptr;
    warn("IMPLICIT_CLASS", iri + " is used as a class (" + std::string(why) +
                               ") without an owl:Class declaration; added",
         line);
    return &o_.classes_.emplace(key, ClassDef{key, label_of(iri), {}}).first->second;
  }

  void collect_relations(const std::vector<RdfStatement>& statements) {
    for (const auto& st : statements) {
      if (st.predicate == kSubClassOf) {
        subclass_edge(st);
      } else if (st.predicate == kDomain || st.predicate == kRange) {
        domain_or_range(st);
      } else if (st.object.is_blank() &&
                 (st.predicate == kOwl + "equivalentClass" || st.predicate == kOwl + "disjointWith")) {
        anonymous_.insert(st.object.value);
      }
    }
  }

  void subclass_edge(const RdfStatement& st) {
    if (st.object.is_blank()) {
      anonymous_.insert(st.object.value);
      return;
    }
    if (!st.subject.is_iri() || !st.object.is_iri()) return;
    if (st.object.value == kOwlThing) return;
    if (st.subject.value == st.object.value) {
      warn("SELF_SUBCLASS", st.subject.value + " subClassOf itself; ignored", st.line);
      return;
    }
    ClassDef* child = ensure_class(st.subject.value, st.line, "subject of rdfs:subClassOf");
    ClassDef* parent = ensure_class(st.object.value, st.line, "object of rdfs:subClassOf");
    if (child == nullptr || parent == nullptr) {
      warn("DANGLING_REFERENCE",
           "subClassOf edge " + st.subject.value + " -> " + st.object.value + " skipped", st.line);
      return;
    }
    child->parents.insert(parent->iri);
  }

  void domain_or_range(const RdfStatement& st) {
    bool is_domain = st.predicate == kDomain;
    if (st.object.is_blank()) {
      anonymous_.insert(st.object.value);
      return;
    }
    if (!st.subject.is_iri() || !st.object.is_iri() || !Iri::is_valid(st.subject.value) ||
        !Iri::is_valid(st.object.value)) {
      return;
    }
    auto it = o_.properties_.find(Iri(st.subject.value));
    if (it == o_.properties_.end()) {
      if (o_.classes_.count(Iri(st.subject.value)) == 0) {
        warn("UNDECLARED_PROPERTY",
             std::string(is_domain ? "rdfs:domain" : "rdfs:range") + " asserted on undeclared " +
                 st.subject.value + "; ignored",
             st.line);
      }
      return;
    }
    PropertyDef& prop = it->second;
    const std::string& target = st.object.value;
    if (target == kOwlThing) return;
    if (is_domain) {
      prop.domains.insert(Iri(target));
      return;
    }
    bool is_xsd = starts_with(target, kXsd);
    bool is_literal_type = is_xsd || target == kRdfs + "Literal" || starts_with(target, kRdf);
    if (prop.kind == PropertyKind::Datatype) {
      if (!is_xsd) {
        warn("NON_XSD_RANGE",
             "datatype property " + prop.iri.str() + " range " + target + " is not an XSD datatype; dropped",
             st.line);
        return;
      }
    } else if (is_literal_type) {
      warn("DATATYPE_RANGE_ON_OBJECT_PROPERTY",
           "object property " + prop.iri.str() + " has datatype range " + target + "; dropped",
           st.line);
      return;
    }
    prop.ranges.insert(Iri(target));
  }

  void check_closure() {
    for (const auto& [iri, prop] : o_.properties_) {
      for (const auto& d : prop.domains) {
        if (o_.classes_.count(d) == 0) {
          warn("DANGLING_REFERENCE", "domain " + d.str() + " of " + iri.str() + " is not a declared class", 0);
        }
      }
      if (prop.kind != PropertyKind::Object) continue;
      for (const auto& r : prop.ranges) {
        if (o_.classes_.count(r) == 0) {
          warn("DANGLING_REFERENCE", "range " + r.str() + " of " + iri.str() + " is not a declared class", 0);
        }
      }
    }
  }

  void check_acyclic() {
    enum class Mark { Unvisited, Active, Done };
    std::map<Iri, Mark> mark;
    std::vector<Iri> path;
    std::function<void(const Iri&)> visit = [&](const Iri& c) {
      mark[c] = Mark::Active;
      path.push_back(c);
      for (const auto& p : o_.classes_.at(c).parents) {
        Mark m = mark.count(p) ? mark[p] : Mark::Unvisited;
        if (m == Mark::Active) {
          auto start = std::find(path.begin(), path.end(), p);
          std::vector<std::string> members;
          for (auto it = start; it != path.end(); ++it) members.push_back(it->str());
          std::sort(members.begin(), members.end());
          throw CyclicSubclassError(std::move(members));
        }
        if (m == Mark::Unvisited) visit(p);
      }
      path.pop_back();
      mark[c] = Mark::Done;
    };
    for (const auto& [iri, cls] : o_.classes_) {
      if (!mark.count(iri)) visit(iri);
    }
  }

  struct TypeInfo {
    std::set<std::string> types;
    long line = 0;
  };

  Ontology o_;
  std::unordered_map<std::string, TypeInfo> types_;
  std::vector<std::string> order_;
  std::unordered_map<std::string, std::optional<std::string>> labels_;
  std::unordered_map<std::string, bool> label_preferred_;
  std::set<std::string> anonymous_;
  std::size_t declared_classes_ = 0;
};

const ClassDef* Ontology::find_class(const Iri& iri) const {
  auto it = classes_.find(iri);
  return it == classes_.end() ? nullptr : &it->second;
}

const PropertyDef* Ontology::find_property(const Iri& iri) const {
  auto it = properties_.find(iri);
  return it == properties_.end() ? nullptr : &it->second;
}

bool Ontology::is_subclass_or_same(const Iri& cls, const Iri& ancestor) const {
  std::vector<Iri> frontier{cls};
  std::set<Iri> seen;
  while (!frontier.empty()) {
    Iri c = frontier.back();
    frontier.pop_back();
    if (c == ancestor) return true;
    if (!seen.insert(c).second) continue;
    if (const ClassDef* def = find_class(c)) {
      frontier.insert(frontier.end(), def->parents.begin(), def->parents.end());
    }
  }
  return false;
}

Ontology parse_ontology(std::string_view document, std::string source_name) {
  return OntologyBuilder(std::move(source_name)).build(document);
}

Ontology parse_ontology(std::istream& document, std::string source_name) {
  std::string text((std::istreambuf_iterator<char>(document)), std::istreambuf_iterator<char>());
  return parse_ontology(std::string_view(text), std::move(source_name));
}

Ontology load_ontology_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot read " + path.string());
  return parse_ontology(in, path.filename().string());
}

std::vector<ClassDef> list_classes(const Ontology& o) {
  std::vector<ClassDef> out;
  out.reserve(o.classes().size());
  for (const auto& [iri, cls] : o.classes()) out.push_back(cls);
  return out;
}

std::vector<PropertyDef> list_properties(const Ontology& o) {
  std::vector<PropertyDef> out;
  out.reserve(o.properties().size());
  for (const auto& [iri, prop] : o.properties()) out.push_back(prop);
  return out;
}

std::set<Iri> subclasses_of(const Ontology& o, const Iri& cls, bool transitive) {
  if (o.find_class(cls) == nullptr) {
    throw Error(ErrorCode::UnknownClass, "unknown class " + cls.str());
  }
  std::map<Iri, std::vector<Iri>> children;
  for (const auto& [iri, def] : o.classes()) {
    for (const auto& p : def.parents) children[p].push_back(iri);
  }
  std::set<Iri> out;
  std::vector<Iri> frontier{cls};
  while (!frontier.empty()) {
    Iri c = frontier.back();
    frontier.pop_back();
    for (const auto& child : children[c]) {
      if (out.insert(child).second && transitive) frontier.push_back(child);
    }
  }
  out.erase(cls);
  return out;
}

std::optional<Iri> try_resolve(const Ontology& o, std::string_view name) {
  if (name.size() >= 2 && name.front() == '<' && name.back() == '>') {
    name = name.substr(1, name.size() - 2);
    if (!Iri::is_valid(name)) return std::nullopt;
    return Iri(std::string(name));
  }
  if (name.find("://") != std::string_view::npos) {
    if (!Iri::is_valid(name)) return std::nullopt;
    return Iri(std::string(name));
  }
  if (auto curie = Curie::parse(name)) {
    if (auto expanded = o.namespaces().expand(*curie)) return expanded;
  }
  if (Iri::is_valid(name)) return Iri(std::string(name));
  return std::nullopt;
}

Iri resolve(const Ontology& o, std::string_view name) {
  if (auto iri = try_resolve(o, name)) return *iri;
  if (auto curie = Curie::parse(name)) {
    throw Error(ErrorCode::UnknownPrefix, "unknown prefix '" + curie->prefix + "' in '" +
                                              std::string(name) + "'");
  }
  throw Error(ErrorCode::UnknownPrefix, "'" + std::string(name) + "' is neither an IRI nor a prefixed name");
}

std::string short_name(const Ontology& o, const Iri& iri) {
  if (auto curie = o.namespaces().compact(iri)) return curie->str();
  return iri.str();
}

}  // namespace oqb
