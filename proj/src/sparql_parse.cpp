// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "oqb/error.hpp"
#include "oqb/sparql.hpp"

namespace oqb {

namespace {

enum class Tok {
  IriRef,     // <...>, text is the IRI
  PrefixedName,  // p:local or p: ; text is the whole name
  Var,        // ?x or $x ; text is the name
  String,     // text is the unescaped lexical form
  Word,       // bare keyword
  Number,
  Punct,      // { } . ; , * ( ) [ ]
  TypeTag,    // ^^
  LangTag,    // @en
  BlankNode,  // _:b
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;

    char c = peek();
    if (c == '<') {
      advance();
      std::size_t start = pos_;
      while (pos_ < text_.size() && peek() != '>') {
        char d = peek();
        if (d == '\n' || d == ' ' || d == '\t' || d == '"' || d == '{' || d == '}') {
          fail(t, "malformed IRI reference");
        }
        advance();
      }
      if (pos_ >= text_.size()) fail(t, "unterminated IRI reference");
      t.kind = Tok::IriRef;
      t.text = std::string(text_.substr(start, pos_ - start));
      advance();
      return t;
    }
    if (c == '?' || c == '$') {
      advance();
      std::size_t start = pos_;
      if (pos_ >= text_.size() || !is_name_start(peek())) fail(t, "expected variable name after '" + std::string(1, c) + "'");
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) advance();
      t.kind = Tok::Var;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (c == '"' || c == '\'') {
      t.kind = Tok::String;
      t.text = read_string(t);
      return t;
    }
    if (c == '^' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '^') {
      advance();
      advance();
      t.kind = Tok::TypeTag;
      return t;
    }
    if (c == '@') {
      advance();
      std::size_t start = pos_;
      while (pos_ < text_.size() && (is_name_char(peek()))) advance();
      t.kind = Tok::LangTag;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (c == '_' && pos_ + 1 < text_.size() && text_[pos_ + 1] == ':') {
      std::size_t start = pos_;
      advance();
      advance();
      while (pos_ < text_.size() && is_name_char(peek())) advance();
      t.kind = Tok::BlankNode;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '+' || c == '-') && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      std::size_t start = pos_;
      advance();
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == 'e' ||
              peek() == 'E')) {
        if (peek() == '.' && (pos_ + 1 >= text_.size() ||
                              !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
          break;
        }
        advance();
      }
      t.kind = Tok::Number;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (is_name_start(c) || c == ':') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_name_char(peek())) advance();
      if (pos_ < text_.size() && peek() == ':') {
        advance();
        // Local part; a '.' is only part of the name when a name char follows.
        while (pos_ < text_.size()) {
          if (is_name_char(peek())) {
            advance();
          } else if (peek() == '.' && pos_ + 1 < text_.size() && is_name_char(text_[pos_ + 1])) {
            advance();
          } else {
            break;
          }
        }
        t.kind = Tok::PrefixedName;
      } else {
        t.kind = Tok::Word;
      }
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    static constexpr std::string_view kPunct = "{}.;,*()[]";
    if (kPunct.find(c) != std::string_view::npos) {
      advance();
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
      return t;
    }
    fail(t, std::string("unexpected character '") + c + "'");
  }

 private:
  [[noreturn]] static void fail(const Token& at, const std::string& message) {
    throw PositionedError(ErrorCode::SyntaxError, message, at.line, at.column);
  }

  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = peek();
      if (c == '#') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string read_string(const Token& at) {
    char quote = peek();
    advance();
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail(at, "unterminated string literal");
      char c = peek();
      if (c == quote) {
        advance();
        return out;
      }
      if (c == '\n' || c == '\r') fail(at, "line break inside string literal");
      if (c != '\\') {
        out += c;
        advance();
        continue;
      }
      advance();
      if (pos_ >= text_.size()) fail(at, "unterminated string literal");
      char e = peek();
      advance();
      switch (e) {
        case 't': out += '\t'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        case '\\': out += '\\'; break;
        case 'u':
        case 'U': {
          std::size_t digits = e == 'u' ? 4 : 8;
          if (pos_ + digits > text_.size()) fail(at, "truncated unicode escape");
          std::string hex(text_.substr(pos_, digits));
          if (!std::all_of(hex.begin(), hex.end(),
                           [](char h) { return std::isxdigit(static_cast<unsigned char>(h)); })) {
            fail(at, "bad unicode escape");
          }
          for (std::size_t i = 0; i < digits; ++i) advance();
          append_utf8(out, std::stoul(hex, nullptr, 16));
          break;
        }
        default: fail(at, std::string("unknown escape '\\") + e + "'");
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// Keywords that name SPARQL features outside the supported subset.
const std::set<std::string>& unsupported_keywords() {
  static const std::set<std::string> kWords = {
      "OPTIONAL", "FILTER",  "UNION",  "GRAPH",  "MINUS",    "BIND",     "VALUES",
      "SERVICE",  "LIMIT",   "OFFSET", "ORDER",  "GROUP",    "HAVING",   "CONSTRUCT",
      "ASK",      "DESCRIBE", "FROM",  "DISTINCT", "REDUCED", "BASE",    "INSERT",
      "DELETE",   "LOAD",    "CLEAR",  "CREATE", "DROP",     "WITH",     "NAMED"};
  return kWords;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { bump(); }

  SparqlQuery parse() {
    prologue();
    select_clause();
    where_clause();
    if (tok_.kind == Tok::Word) reject_keyword();
    if (tok_.kind != Tok::End) fail("unexpected trailing input '" + tok_.text + "'");
    check_selection();
    return std::move(q_);
  }

 private:
  void bump() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message) const { fail_at(tok_, message); }

  [[noreturn]] static void fail_at(const Token& at, const std::string& message) {
    throw PositionedError(ErrorCode::SyntaxError, message, at.line, at.column);
  }

  [[noreturn]] void unsupported(const std::string& construct) const {
    throw UnsupportedConstruct(construct, tok_.line, tok_.column);
  }

  bool is_word(std::string_view w) const { return tok_.kind == Tok::Word && upper(tok_.text) == w; }

  bool is_punct(char c) const { return tok_.kind == Tok::Punct && tok_.text.size() == 1 && tok_.text[0] == c; }

  void expect_punct(char c) {
    if (!is_punct(c)) fail(std::string("expected '") + c + "'" + found());
    bump();
  }

  std::string found() const {
    if (tok_.kind == Tok::End) return " but reached end of input";
    return " but found '" + tok_.text + "'";
  }

  void reject_keyword() const {
    std::string w = upper(tok_.text);
    if (unsupported_keywords().count(w) != 0) unsupported(w);
  }

  void prologue() {
    while (true) {
      if (is_word("BASE")) unsupported("BASE");
      if (!is_word("PREFIX")) return;
      bump();
      if (tok_.kind != Tok::PrefixedName || tok_.text.back() != ':') {
        fail("expected prefix name ending in ':'" + found());
      }
      std::string prefix = tok_.text.substr(0, tok_.text.size() - 1);
      Token at = tok_;
      bump();
      if (tok_.kind != Tok::IriRef) fail("expected <namespace IRI>" + found());
      if (!Iri::is_valid(tok_.text)) fail("'" + tok_.text + "' is not an absolute IRI");
      if (q_.prefixes.contains(prefix)) fail_at(at, "prefix '" + prefix + ":' declared twice");
      if (!q_.prefixes.add(prefix, Iri(tok_.text))) {
        unsupported("PREFIX namespace not ending in '#' or '/'");
      }
      bump();
    }
  }

  void select_clause() {
    if (tok_.kind == Tok::Word) {
      std::string w = upper(tok_.text);
      if (w == "CONSTRUCT" || w == "ASK" || w == "DESCRIBE") unsupported(w);
    }
    if (!is_word("SELECT")) fail("expected SELECT" + found());
    bump();
    if (is_word("DISTINCT") || is_word("REDUCED")) unsupported(upper(tok_.text));
    if (is_punct('*')) unsupported("SELECT *");
    while (tok_.kind == Tok::Var) {
      q_.select.push_back(tok_.text);
      select_tokens_.push_back(tok_);
      bump();
    }
    if (is_punct('(')) unsupported("projection expression");
    if (q_.select.empty()) fail("expected at least one variable after SELECT" + found());
    if (is_word("FROM")) unsupported("FROM");
  }

  void where_clause() {
    if (is_word("WHERE")) bump();
    Token open = tok_;
    expect_punct('{');
    while (!is_punct('}')) {
      if (tok_.kind == Tok::End) fail_at(open, "unterminated WHERE block");
      triples_same_subject();
      if (is_punct('.')) {
        bump();
      } else if (tok_.kind == Tok::Word) {
        reject_keyword();
        fail("expected '.' or '}'" + found());
      } else if (!is_punct('}')) {
        fail("expected '.' or '}'" + found());
      }
    }
    if (q_.where.empty()) fail("WHERE block has no triple patterns");
    bump();
  }

  void triples_same_subject() {
    if (tok_.kind == Tok::Word) reject_keyword();
    if (is_punct('{')) unsupported("nested group pattern");
    Token subject_at = tok_;
    RdfTerm subject = term();
    if (std::holds_alternative<Literal>(subject)) fail_at(subject_at, "literal in subject position");
    while (true) {
      RdfTerm predicate = verb();
      while (true) {
        q_.where.push_back({subject, predicate, term()});
        if (!is_punct(',')) break;
        bump();
      }
      if (!is_punct(';')) return;
      while (is_punct(';')) bump();
      if (is_punct('.') || is_punct('}')) return;
    }
  }

  RdfTerm verb() {
    if (tok_.kind == Tok::Word && tok_.text == "a") {
      bump();
      return Iri(std::string(vocab::kRdf) + "type");
    }
    Token at = tok_;
    RdfTerm t = term();
    if (std::holds_alternative<Literal>(t)) fail_at(at, "literal in predicate position");
    return t;
  }

  RdfTerm term() {
    switch (tok_.kind) {
      case Tok::Var: {
        Variable v{tok_.text};
        bump();
        return v;
      }
      case Tok::IriRef: {
        if (!Iri::is_valid(tok_.text)) fail("'" + tok_.text + "' is not an absolute IRI");
        Iri iri(tok_.text);
        bump();
        return iri;
      }
      case Tok::PrefixedName: {
        auto colon = tok_.text.find(':');
        std::string prefix = tok_.text.substr(0, colon);
        std::string local = tok_.text.substr(colon + 1);
        const Iri* ns = q_.prefixes.find(prefix);
        if (ns == nullptr) fail("undeclared prefix '" + prefix + ":'");
        if (local.empty()) fail("prefixed name '" + tok_.text + "' has no local part");
        Iri iri(ns->str() + local);
        bump();
        return iri;
      }
      case Tok::String: {
        Literal lit{tok_.text};
        bump();
        if (tok_.kind == Tok::TypeTag) unsupported("typed literal");
        if (tok_.kind == Tok::LangTag) unsupported("language-tagged literal");
        return lit;
      }
      case Tok::Number: unsupported("numeric literal");
      case Tok::BlankNode: unsupported("blank node");
      case Tok::Punct:
        if (is_punct('[')) unsupported("blank node");
        if (is_punct('(')) unsupported("collection");
        if (is_punct('{')) unsupported("nested group pattern");
        break;
      case Tok::Word: {
        std::string w = upper(tok_.text);
        if (w == "TRUE" || w == "FALSE") unsupported("boolean literal");
        reject_keyword();
        break;
      }
      default: break;
    }
    fail("expected a variable, IRI, prefixed name or literal" + found());
  }

  void check_selection() const {
    std::set<std::string> bound;
    for (const auto& p : q_.where) {
      for (const RdfTerm* t : {&p.subject, &p.predicate, &p.object}) {
        if (const auto* v = std::get_if<Variable>(t)) bound.insert(v->name);
      }
    }
    for (const auto& at : select_tokens_) {
      if (bound.count(at.text) == 0) fail_at(at, "selected variable ?" + at.text + " does not occur in WHERE");
    }
  }

  Lexer lexer_;
  Token tok_;
  SparqlQuery q_;
  std::vector<Token> select_tokens_;
};

}  // namespace

SparqlQuery parse_sparql(std::string_view text) { return Parser(text).parse(); }

}  // namespace oqb
