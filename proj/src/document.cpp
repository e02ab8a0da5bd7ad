// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include "oqb/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "oqb/error.hpp"
#include "oqb/sparql.hpp"

namespace oqb {

namespace {

constexpr std::string_view kMagic = "oqb-query v";

std::string quote(const std::string& s) {
  try {
    return nlohmann::json(s).dump();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::FormatError, "text field is not valid UTF-8");
  }
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

class DocumentReader {
 public:
  DocumentReader(std::string_view text, std::size_t node_cap)
      : lines_(split_lines(text)), node_cap_(node_cap) {}

  QueryDocument read() {
    QueryDocument d;
    d.version = header();
    d.question = quoted_field("question");
    d.ontology_source = quoted_field("ontology");
    std::size_t stored_cap = number_field("node-cap");
    if (stored_cap == 0) {
      --line_;
      fail("node-cap must be positive");
    }
    std::uint32_t next_id = static_cast<std::uint32_t>(number_field("next-id"));

    QueryGraph graph(node_cap_ != 0 ? node_cap_ : stored_cap);
    while (peek_keyword() == "node") restore_node(graph);
    while (peek_keyword() == "edge") add_edge(graph);
    select(graph);
    graph.reserve_ids(next_id);
    graph.set_question(d.question);
    d.graph = std::move(graph);
    d.sparql = sparql_block();
    if (line_ < lines_.size()) fail("unexpected content after 'end'");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw PositionedError(ErrorCode::FormatError, message, std::min(line_ + 1, lines_.size() + 1), 1);
  }

  const std::string& current() const {
    if (line_ >= lines_.size()) fail("unexpected end of document");
    return lines_[line_];
  }

  std::string peek_keyword() const {
    if (line_ >= lines_.size()) return "";
    const std::string& l = lines_[line_];
    return l.substr(0, l.find(' '));
  }

  // Returns the text after "<keyword> " and advances.
  std::string take(std::string_view keyword) {
    const std::string& l = current();
    if (l.size() < keyword.size() + 1 || l.compare(0, keyword.size(), keyword) != 0 ||
        l[keyword.size()] != ' ') {
      if (l == keyword) {
        ++line_;
        return "";
      }
      fail("expected '" + std::string(keyword) + "' line");
    }
    std::string rest = l.substr(keyword.size() + 1);
    ++line_;
    return rest;
  }

  std::string header() {
    const std::string& l = current();
    if (l.compare(0, kMagic.size(), kMagic) != 0 || l.size() == kMagic.size()) {
      fail("not an oqb query document");
    }
    std::string version = l.substr(kMagic.size());
    if (version != kDocumentVersion) {
      throw Error(ErrorCode::VersionUnsupported, "unsupported document version " + version);
    }
    ++line_;
    return version;
  }

  std::string unquote(const std::string& text) {
    try {
      auto j = nlohmann::json::parse(text);
      if (!j.is_string()) fail("expected a quoted string");
      return j.get<std::string>();
    } catch (const nlohmann::json::exception&) {
      fail("malformed quoted string");
    }
  }

  std::string quoted_field(std::string_view keyword) {
    std::size_t at = line_;
    std::string rest = take(keyword);
    line_ = at;
    std::string value = unquote(rest);
    ++line_;
    return value;
  }

  std::size_t parse_number(const std::string& text) {
    if (text.empty() || text.size() > 9 ||
        !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      fail("expected a number, found '" + text + "'");
    }
    return std::stoul(text);
  }

  std::size_t number_field(std::string_view keyword) {
    std::size_t at = line_;
    std::string rest = take(keyword);
    line_ = at;
    std::size_t value = parse_number(rest);
    ++line_;
    return value;
  }

  // Splits off `n` space separated fields; the remainder is returned last.
  std::vector<std::string> fields(const std::string& text, std::size_t n) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto space = text.find(' ', pos);
      if (space == std::string::npos) fail("too few fields");
      out.push_back(text.substr(pos, space - pos));
      pos = space + 1;
    }
    out.push_back(text.substr(pos));
    return out;
  }

  template <typename F>
  void graph_op(F&& op) {
    try {
      op();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CapExceeded) throw;
      fail(e.what());
    }
  }

  void restore_node(QueryGraph& graph) {
    std::size_t at = line_;
    auto f = fields(take("node"), 2);
    line_ = at;
    QueryNode node{NodeId{static_cast<std::uint32_t>(parse_number(f[0]))},
                   NodeKind::Variable, unquote(f[2])};
    graph_op([&] {
      node.kind = node_kind_from_string(f[1]);
      graph.restore_node(std::move(node));
    });
    ++line_;
  }

  void add_edge(QueryGraph& graph) {
    std::size_t at = line_;
    auto f = fields(take("edge"), 2);
    line_ = at;
    NodeId from{static_cast<std::uint32_t>(parse_number(f[0]))};
    NodeId to{static_cast<std::uint32_t>(parse_number(f[1]))};
    graph_op([&] { graph.add_edge(from, to, f[2]); });
    ++line_;
  }

  void select(QueryGraph& graph) {
    std::size_t at = line_;
    std::string rest = take("select");
    line_ = at;
    std::vector<std::string> names;
    std::istringstream in(rest);
    for (std::string name; in >> name;) names.push_back(name);
    graph_op([&] { graph.set_selected(std::move(names)); });
    ++line_;
  }

  std::string sparql_block() {
    std::size_t count = number_field("sparql");
    std::string text;
    for (std::size_t i = 0; i < count; ++i) {
      text += current();
      text += '\n';
      ++line_;
    }
    if (current() != "end") fail("expected 'end'");
    ++line_;
    return text;
  }

  std::vector<std::string> lines_;
  std::size_t node_cap_;
  std::size_t line_ = 0;
};

}  // namespace

QueryDocument make_document(const QueryGraph& g, const Ontology& o) {
  if (g.nodes().empty()) throw Error(ErrorCode::EmptyGraph, "nothing to save: the graph is empty");
  QueryDocument d;
  d.question = g.question();
  d.ontology_source = o.source_name();
  d.graph = g;
  d.sparql = serialize(translate(g, o));
  return d;
}

std::string save_document(const QueryDocument& d) {
  if (!d.sparql.empty() && d.sparql.back() != '\n') {
    throw Error(ErrorCode::FormatError, "stored SPARQL text must end with a newline");
  }
  std::string out;
  out += std::string(kMagic) + d.version + "\n";
  out += "question " + quote(d.question) + "\n";
  out += "ontology " + quote(d.ontology_source) + "\n";
  out += "node-cap " + std::to_string(d.graph.node_cap()) + "\n";
  out += "next-id " + std::to_string(d.graph.next_id()) + "\n";
  for (const auto& [id, node] : d.graph.nodes()) {
    out += "node " + std::to_string(id.value) + " " + std::string(to_string(node.kind)) + " " +
           quote(node.payload) + "\n";
  }
  for (const auto& e : d.graph.edges()) {
    out += "edge " + std::to_string(e.from.value) + " " + std::to_string(e.to.value) + " " +
           e.predicate + "\n";
  }
  out += "select";
  for (const auto& v : d.graph.selected()) out += " " + v;
  out += "\n";
  auto sparql_lines = split_lines(d.sparql);
  out += "sparql " + std::to_string(sparql_lines.size()) + "\n";
  out += d.sparql;
  out += "end\n";
  return out;
}

void save_document(const QueryDocument& d, std::ostream& sink) {
  std::string text = save_document(d);
  sink.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!sink) throw Error(ErrorCode::IoFailure, "failed to write query document");
}

QueryDocument load_document(std::string_view text, std::size_t node_cap) {
  return DocumentReader(text, node_cap).read();
}

QueryDocument load_document(std::istream& source, std::size_t node_cap) {
  std::string text((std::istreambuf_iterator<char>(source)), std::istreambuf_iterator<char>());
  return load_document(std::string_view(text), node_cap);
}

QueryDocument load_document_file(const std::filesystem::path& path, std::size_t node_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot read " + path.string());
  return load_document(in, node_cap);
}

std::vector<Diagnostic> check_document(const QueryDocument& d, const Ontology& o) {
  auto diagnostics = validate(d.graph, o, /*strict=*/true);
  if (has_errors(diagnostics)) return diagnostics;
  std::string derived = serialize(translate(d.graph, o));
  if (derived != d.sparql) {
    diagnostics.push_back({Severity::Warning, "SPARQL_MISMATCH",
                           "stored SPARQL differs from the text derived from the graph under " +
                               o.source_name() + "; using the derived text",
                           "", {}});
  }
  return diagnostics;
}

std::string export_plain(const QueryDocument& d) {
  std::string question = d.question;
  std::replace(question.begin(), question.end(), '\n', ' ');
  std::replace(question.begin(), question.end(), '\r', ' ');
  return "# Question: " + question + "\n" + d.sparql;
}

void export_plain(const QueryDocument& d, std::ostream& sink) {
  std::string text = export_plain(d);
  sink.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!sink) throw Error(ErrorCode::IoFailure, "failed to write plain export");
}

}  // namespace oqb
