// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include "rdf_xml.hpp"

#include <expat.h>

#include <cctype>
#include <memory>
#include <optional>

#include "oqb/error.hpp"
#include "oqb/iri.hpp"

namespace oqb::detail {

namespace {

// Expat reports namespaced names as "<uri><sep><local>"; a space cannot occur
// in a namespace name.
constexpr char kNsSeparator = ' ';

struct XmlAttribute {
  std::string ns;
  std::string local;
  std::string value;
};

struct XmlElement {
  std::string ns;
  std::string local;
  std::vector<XmlAttribute> attributes;
  std::vector<XmlElement> children;
  std::string text;
  long line = 0;

  const XmlAttribute* attribute(std::string_view ns_uri, std::string_view name) const {
    for (const auto& a : attributes) {
      if (a.ns == ns_uri && a.local == name) return &a;
    }
    return nullptr;
  }
};

std::pair<std::string, std::string> split_name(const XML_Char* name) {
  std::string_view full(name);
  auto sep = full.find(kNsSeparator);
  if (sep == std::string_view::npos) return {"", std::string(full)};
  return {std::string(full.substr(0, sep)), std::string(full.substr(sep + 1))};
}

class DomBuilder {
 public:
  explicit DomBuilder(std::vector<NamespaceDecl>& namespaces) : namespaces_(namespaces) {}

  void parse(std::string_view text) {
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
        XML_ParserCreateNS(nullptr, kNsSeparator), &XML_ParserFree);
    if (!parser) throw Error(ErrorCode::MalformedXml, "could not allocate XML parser");
    parser_ = parser.get();
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &DomBuilder::on_start, &DomBuilder::on_end);
    XML_SetCharacterDataHandler(parser_, &DomBuilder::on_text);
    XML_SetStartNamespaceDeclHandler(parser_, &DomBuilder::on_namespace);

    // Feed in chunks so that documents above INT_MAX bytes are not an issue.
    constexpr std::size_t kChunk = 1 << 20;
    std::size_t offset = 0;
    do {
      std::size_t n = std::min(kChunk, text.size() - offset);
      bool last = offset + n == text.size();
      if (XML_Parse(parser_, text.data() + offset, static_cast<int>(n), last ? 1 : 0) ==
          XML_STATUS_ERROR) {
        throw PositionedError(ErrorCode::MalformedXml, XML_ErrorString(XML_GetErrorCode(parser_)),
                              XML_GetCurrentLineNumber(parser_),
                              XML_GetCurrentColumnNumber(parser_) + 1);
      }
      offset += n;
    } while (offset < text.size());
    parser_ = nullptr;
    if (!root_) throw Error(ErrorCode::MalformedXml, "document has no root element");
  }

  const XmlElement& root() const { return *root_; }

 private:
  static void on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
    auto* self = static_cast<DomBuilder*>(data);
    XmlElement e;
    std::tie(e.ns, e.local) = split_name(name);
    e.line = static_cast<long>(XML_GetCurrentLineNumber(self->parser_));
    for (int i = 0; attrs[i] != nullptr; i += 2) {
      auto [ns, local] = split_name(attrs[i]);
      e.attributes.push_back({std::move(ns), std::move(local), attrs[i + 1]});
    }
    self->stack_.push_back(std::move(e));
  }

  static void on_end(void* data, const XML_Char*) {
    auto* self = static_cast<DomBuilder*>(data);
    XmlElement done = std::move(self->stack_.back());
    self->stack_.pop_back();
    if (self->stack_.empty()) {
      self->root_ = std::move(done);
    } else {
      self->stack_.back().children.push_back(std::move(done));
    }
  }

  static void on_text(void* data, const XML_Char* s, int len) {
    auto* self = static_cast<DomBuilder*>(data);
    if (!self->stack_.empty()) self->stack_.back().text.append(s, static_cast<std::size_t>(len));
  }

  static void on_namespace(void* data, const XML_Char* prefix, const XML_Char* uri) {
    auto* self = static_cast<DomBuilder*>(data);
    self->namespaces_.push_back({prefix ? prefix : "", uri ? uri : "",
                                 static_cast<long>(XML_GetCurrentLineNumber(self->parser_))});
  }

  XML_Parser parser_ = nullptr;
  std::vector<XmlElement> stack_;
  std::optional<XmlElement> root_;
  std::vector<NamespaceDecl>& namespaces_;
};

const std::string kRdfNs(vocab::kRdf);
const std::string kXmlNs(vocab::kXml);

bool is_rdf(const XmlElement& e, std::string_view local) {
  return e.ns == kRdfNs && e.local == local;
}

// Older RDF/XML allows the syntax attributes without the rdf: prefix.
bool is_syntax_attribute(const XmlAttribute& a, std::string_view local) {
  return (a.ns == kRdfNs || a.ns.empty()) && a.local == local;
}

const XmlAttribute* syntax_attribute(const XmlElement& e, std::string_view local) {
  for (const auto& a : e.attributes) {
    if (is_syntax_attribute(a, local)) return &a;
  }
  return nullptr;
}

bool is_reserved_attribute(const XmlAttribute& a) {
  if (a.ns == kXmlNs) return true;
  if (a.ns.empty()) return true;  // unqualified attributes carry no RDF meaning
  if (a.ns == kRdfNs) {
    static constexpr std::string_view kSyntax[] = {"about",     "ID",       "nodeID",
                                                   "resource",  "datatype", "parseType",
                                                   "bagID",     "aboutEach", "aboutEachPrefix"};
    for (auto s : kSyntax) {
      if (a.local == s) return true;
    }
  }
  return false;
}

std::string descendant_text(const XmlElement& e) {
  std::string out = e.text;
  for (const auto& c : e.children) out += descendant_text(c);
  return out;
}

struct Scope {
  std::string base;
  std::string lang;
};

class Striper {
 public:
  explicit Striper(RdfXmlDocument& doc) : doc_(doc) {}

  void document(const XmlElement& root, const Scope& scope) {
    Scope s = enter(root, scope);
    doc_.base = s.base;
    if (is_rdf(root, "RDF")) {
      for (const auto& child : root.children) node_element(child, s);
    } else {
      node_element(root, scope);
    }
  }

 private:
  Scope enter(const XmlElement& e, const Scope& outer) const {
    Scope s = outer;
    if (const auto* base = e.attribute(kXmlNs, "base")) s.base = resolve_reference(outer.base, base->value);
    if (const auto* lang = e.attribute(kXmlNs, "lang")) s.lang = lang->value;
    return s;
  }

  RdfNode fresh_blank() { return {RdfNode::Kind::Blank, "_:b" + std::to_string(++blank_counter_), "", ""}; }

  static RdfNode iri(std::string value) { return {RdfNode::Kind::Iri, std::move(value), "", ""}; }

  static RdfNode named_blank(const std::string& id) { return {RdfNode::Kind::Blank, "_:n" + id, "", ""}; }

  void emit(const RdfNode& s, std::string p, RdfNode o, long line) {
    doc_.statements.push_back({s, std::move(p), std::move(o), line});
  }

  RdfNode node_element(const XmlElement& e, const Scope& outer) {
    Scope scope = enter(e, outer);
    RdfNode subject;
    if (const auto* about = syntax_attribute(e, "about")) {
      subject = iri(resolve_reference(scope.base, about->value));
    } else if (const auto* id = syntax_attribute(e, "ID")) {
      subject = iri(resolve_reference(scope.base, "#" + id->value));
    } else if (const auto* node_id = syntax_attribute(e, "nodeID")) {
      subject = named_blank(node_id->value);
    } else {
      subject = fresh_blank();
    }

    if (!is_rdf(e, "Description")) emit(subject, kRdfNs + "type", iri(e.ns + e.local), e.line);

    for (const auto& a : e.attributes) {
      if (is_reserved_attribute(a)) continue;
      if (a.ns == kRdfNs && a.local == "type") {
        emit(subject, kRdfNs + "type", iri(resolve_reference(scope.base, a.value)), e.line);
        continue;
      }
      emit(subject, a.ns + a.local, {RdfNode::Kind::Literal, a.value, "", scope.lang}, e.line);
    }

    int li = 0;
    for (const auto& child : e.children) property_element(child, subject, scope, li);
    return subject;
  }

  void property_element(const XmlElement& e, const RdfNode& subject, const Scope& outer, int& li) {
    Scope scope = enter(e, outer);
    std::string predicate = e.ns + e.local;
    if (is_rdf(e, "li")) predicate = kRdfNs + "_" + std::to_string(++li);

    const auto* parse_type = syntax_attribute(e, "parseType");
    if (parse_type != nullptr && parse_type->value == "Resource") {
      RdfNode object = fresh_blank();
      emit(subject, predicate, object, e.line);
      int inner_li = 0;
      for (const auto& child : e.children) property_element(child, object, scope, inner_li);
      return;
    }
    if (parse_type != nullptr && parse_type->value == "Collection") {
      std::vector<RdfNode> items;
      for (const auto& child : e.children) items.push_back(node_element(child, scope));
      RdfNode head = iri(kRdfNs + "nil");
      for (auto it = items.rbegin(); it != items.rend(); ++it) {
        RdfNode cell = fresh_blank();
        emit(cell, kRdfNs + "first", *it, e.line);
        emit(cell, kRdfNs + "rest", head, e.line);
        head = cell;
      }
      emit(subject, predicate, head, e.line);
      return;
    }
    if (parse_type != nullptr) {
      emit(subject, predicate,
           {RdfNode::Kind::Literal, descendant_text(e), kRdfNs + "XMLLiteral", ""}, e.line);
      return;
    }
    if (!e.children.empty()) {
      for (const auto& child : e.children) {
        emit(subject, predicate, node_element(child, scope), e.line);
      }
      return;
    }

    const auto* resource = syntax_attribute(e, "resource");
    const auto* node_id = syntax_attribute(e, "nodeID");
    bool has_property_attrs = false;
    for (const auto& a : e.attributes) {
      if (!is_reserved_attribute(a)) has_property_attrs = true;
    }
    if (resource != nullptr || node_id != nullptr || has_property_attrs) {
      RdfNode object = resource != nullptr ? iri(resolve_reference(scope.base, resource->value))
                       : node_id != nullptr ? named_blank(node_id->value)
                                            : fresh_blank();
      for (const auto& a : e.attributes) {
        if (is_reserved_attribute(a)) continue;
        if (a.ns == kRdfNs && a.local == "type") {
          emit(object, kRdfNs + "type", iri(resolve_reference(scope.base, a.value)), e.line);
        } else {
          emit(object, a.ns + a.local, {RdfNode::Kind::Literal, a.value, "", scope.lang}, e.line);
        }
      }
      emit(subject, predicate, object, e.line);
      return;
    }

    RdfNode literal{RdfNode::Kind::Literal, e.text, "", scope.lang};
    if (const auto* dt = syntax_attribute(e, "datatype")) {
      literal.datatype = resolve_reference(scope.base, dt->value);
      literal.lang.clear();
    }
    emit(subject, predicate, std::move(literal), e.line);
  }

  RdfXmlDocument& doc_;
  long blank_counter_ = 0;
};

bool has_scheme(const std::string& ref) {
  if (ref.empty() || !std::isalpha(static_cast<unsigned char>(ref[0]))) return false;
  for (char c : ref) {
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
      return false;
    }
  }
  return false;
}

}  // namespace

std::string resolve_reference(const std::string& base, const std::string& ref) {
  if (has_scheme(ref)) return ref;
  std::string doc = base.substr(0, base.find('#'));
  if (ref.empty()) return doc;
  if (ref[0] == '#') return doc + ref;

  auto scheme_end = doc.find("://");
  if (ref.size() >= 2 && ref[0] == '/' && ref[1] == '/') {
    auto colon = doc.find(':');
    return colon == std::string::npos ? ref : doc.substr(0, colon + 1) + ref;
  }
  if (ref[0] == '/') {
    if (scheme_end == std::string::npos) return ref;
    auto path = doc.find('/', scheme_end + 3);
    return (path == std::string::npos ? doc : doc.substr(0, path)) + ref;
  }
  auto slash = doc.rfind('/');
  if (slash == std::string::npos || (scheme_end != std::string::npos && slash < scheme_end + 3)) {
    return doc + "/" + ref;
  }
  return doc.substr(0, slash + 1) + ref;
}

RdfXmlDocument read_rdf_xml(std::string_view text, const std::string& default_base) {
  RdfXmlDocument doc;
  DomBuilder dom(doc.namespaces);
  dom.parse(text);
  Striper striper(doc);
  striper.document(dom.root(), Scope{default_base, ""});
  return doc;
}

}  // namespace oqb::detail
