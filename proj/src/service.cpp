// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include "oqb/service.hpp"

#include <cctype>
#include <cstdio>
#include <random>

#include "oqb/document.hpp"
#include "oqb/sparql.hpp"

namespace oqb {

using nlohmann::json;

// Sessions ------------------------------------------------------------------

SessionStore::SessionStore(std::chrono::seconds ttl, std::function<Clock::time_point()> now)
    : ttl_(ttl), now_(std::move(now)), salt_(std::random_device{}()) {
  salt_ = (salt_ << 32) ^ std::random_device{}();
}

std::string SessionStore::fresh_id() {
  // Ids only need to be unguessable enough for a desk-top tool and unique.
  std::mt19937_64 rng(salt_ ^ (++counter_ * 0x9E3779B97F4A7C15ULL));
  char buf[40];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng()),
                static_cast<unsigned long long>(counter_));
  return buf;
}

void SessionStore::sweep(Clock::time_point now) {
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    if (now - it->second->last_used > ttl_) {
      it = sessions_.erase(it);
    } else {
      ++it;
    }
  }
}

std::shared_ptr<Session> SessionStore::create(std::size_t node_cap) {
  std::lock_guard lock(mutex_);
  auto now = now_();
  sweep(now);
  auto session = std::make_shared<Session>(fresh_id(), node_cap, now);
  sessions_.emplace(session->id, session);
  return session;
}

std::shared_ptr<Session> SessionStore::get(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto now = now_();
  sweep(now);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::SessionNotFound, "no session " + id);
  it->second->last_used = now;
  return it->second;
}

std::size_t SessionStore::size() {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

// JSON encodings ------------------------------------------------------------

std::string api_error_code(ErrorCode code) {
  std::string out;
  for (char c : to_string(code)) {
    if (std::isupper(static_cast<unsigned char>(c)) != 0 && !out.empty()) out += '_';
    out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

int http_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SessionNotFound:
      return 404;
    case ErrorCode::OntologyMissing:
      return 409;
    case ErrorCode::MalformedXml:
    case ErrorCode::NotAnOntology:
    case ErrorCode::CyclicSubclass:
    case ErrorCode::InvalidIri:
    case ErrorCode::ValidationFailed:
    case ErrorCode::FormatError:
    case ErrorCode::VersionUnsupported:
    case ErrorCode::ParseError:
    case ErrorCode::SyntaxError:
    case ErrorCode::UnsupportedConstruct:
      return 422;
    case ErrorCode::IoFailure:
      return 500;
    default:
      return 400;
  }
}

json to_json(const Diagnostic& d) {
  json j{{"severity", std::string(to_string(d.severity))},
         {"code", d.code},
         {"message", d.message},
         {"location", d.location}};
  if (const auto* node = std::get_if<NodeId>(&d.subject)) j["node"] = node->value;
  if (const auto* edge = std::get_if<EdgeIndex>(&d.subject)) j["edge"] = edge->value;
  return j;
}

json to_json(const std::vector<Diagnostic>& ds) {
  json out = json::array();
  for (const auto& d : ds) out.push_back(to_json(d));
  return out;
}

json to_json(const QueryGraph& g) {
  json nodes = json::array();
  for (const auto& [id, node] : g.nodes()) {
    nodes.push_back({{"id", id.value}, {"kind", std::string(to_string(node.kind))}, {"payload", node.payload}});
  }
  json edges = json::array();
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    edges.push_back({{"index", i}, {"from", e.from.value}, {"to", e.to.value}, {"predicate", e.predicate}});
  }
  return {{"node_cap", g.node_cap()}, {"next_id", g.next_id()}, {"question", g.question()},
          {"nodes", nodes},          {"edges", edges},          {"selected", g.selected()}};
}

json catalog_json(const Ontology& o) {
  auto names = [&o](const std::set<Iri>& iris) {
    json out = json::array();
    for (const auto& iri : iris) out.push_back(short_name(o, iri));
    return out;
  };
  auto label = [](const std::optional<std::string>& l) { return l ? json(*l) : json(nullptr); };

  json namespaces = json::array();
  for (const auto& [prefix, ns] : o.namespaces().entries()) {
    namespaces.push_back({{"prefix", prefix}, {"iri", ns.str()}});
  }
  json classes = json::array();
  for (const auto& c : list_classes(o)) {
    classes.push_back({{"iri", c.iri.str()},
                       {"name", short_name(o, c.iri)},
                       {"label", label(c.label)},
                       {"parents", names(c.parents)}});
  }
  json properties = json::array();
  for (const auto& p : list_properties(o)) {
    properties.push_back({{"iri", p.iri.str()},
                          {"name", short_name(o, p.iri)},
                          {"kind", std::string(to_string(p.kind))},
                          {"label", label(p.label)},
                          {"domains", names(p.domains)},
                          {"ranges", names(p.ranges)}});
  }
  return {{"source", o.source_name()},
          {"namespaces", namespaces},
          {"classes", classes},
          {"properties", properties}};
}

// Api -----------------------------------------------------------------------

namespace {

ApiResponse json_response(int status, const json& body) {
  return {status, "application/json", body.dump()};
}

ApiResponse error_response(ErrorCode code, const std::string& message,
                           const std::vector<Diagnostic>& diagnostics = {}) {
  json error{{"code", api_error_code(code)}, {"message", message}, {"diagnostics", to_json(diagnostics)}};
  return json_response(http_status_for(code), {{"error", error}});
}

json parse_body(std::string_view body) {
  try {
    auto j = json::parse(body);
    if (!j.is_object()) throw Error(ErrorCode::BadRequest, "request body must be a JSON object");
    return j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadRequest, std::string("malformed JSON body: ") + e.what());
  }
}

template <typename T>
T field(const json& body, const char* name) {
  auto it = body.find(name);
  if (it == body.end()) throw Error(ErrorCode::BadRequest, std::string("missing field '") + name + "'");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::BadRequest, std::string("field '") + name + "' has the wrong type");
  }
}

const Ontology& require_ontology(const Session& s) {
  if (!s.ontology) {
    throw Error(ErrorCode::OntologyMissing, "no ontology has been uploaded to this session");
  }
  return *s.ontology;
}

// Graph, live diagnostics and, when the graph translates, its SPARQL text.
json graph_state(const Session& s) {
  json out{{"graph", to_json(s.graph)}, {"diagnostics", json::array()}};
  if (!s.ontology) return out;
  auto diagnostics = validate(s.graph, *s.ontology, /*strict=*/true);
  out["diagnostics"] = to_json(diagnostics);
  if (!has_errors(diagnostics)) out["sparql"] = serialize(translate(s.graph, *s.ontology));
  return out;
}

void apply_op(QueryGraph& g, const json& body) {
  auto op = field<std::string>(body, "op");
  if (op == "add_node") {
    NodeKind kind;
    try {
      kind = node_kind_from_string(field<std::string>(body, "kind"));
    } catch (const Error& e) {
      throw Error(ErrorCode::BadRequest, e.what());
    }
    g.add_node(kind, field<std::string>(body, "payload"));
  } else if (op == "add_edge") {
    g.add_edge(NodeId{field<std::uint32_t>(body, "from")}, NodeId{field<std::uint32_t>(body, "to")},
               field<std::string>(body, "predicate"));
  } else if (op == "remove_node") {
    g.remove_node(NodeId{field<std::uint32_t>(body, "id")});
  } else if (op == "remove_edge") {
    g.remove_edge(field<std::size_t>(body, "index"));
  } else if (op == "clear") {
    g.clear();
  } else if (op == "set_selected") {
    g.set_selected(field<std::vector<std::string>>(body, "variables"));
  } else if (op == "set_question") {
    g.set_question(field<std::string>(body, "question"));
  } else {
    throw Error(ErrorCode::BadRequest, "unknown op '" + op + "'");
  }
}

}  // namespace

Api::Api(std::shared_ptr<const TripleStore> registry, ServiceConfig config,
         std::function<Clock::time_point()> now)
    : registry_(registry ? std::move(registry) : std::make_shared<const TripleStore>()),
      config_(config),
      sessions_(config.session_ttl, std::move(now)) {}

template <typename F>
ApiResponse Api::guarded(F&& handler) {
  try {
    return handler();
  } catch (const ValidationFailed& e) {
    return error_response(e.code(), e.what(), e.diagnostics());
  } catch (const Error& e) {
    return error_response(e.code(), e.what());
  } catch (const std::exception& e) {
    json error{{"code", "INTERNAL"}, {"message", e.what()}, {"diagnostics", json::array()}};
    return json_response(500, {{"error", error}});
  }
}

ApiResponse Api::create_session(std::string_view body) {
  return guarded([&] {
    std::size_t cap = config_.node_cap;
    if (!body.empty()) {
      auto j = parse_body(body);
      if (j.contains("node_cap")) cap = field<std::size_t>(j, "node_cap");
      if (cap == 0) throw Error(ErrorCode::BadRequest, "node_cap must be positive");
    }
    auto s = sessions_.create(cap);
    return json_response(201, {{"session", s->id}, {"node_cap", cap}});
  });
}

ApiResponse Api::upload_ontology(const std::string& session, std::string_view owl,
                                 std::string source_name) {
  return guarded([&] {
    auto s = sessions_.get(session);
    if (source_name.empty()) source_name = "upload.owl";
    // Parse before taking the session lock; a failed upload changes nothing.
    auto ontology = std::make_shared<const Ontology>(parse_ontology(owl, std::move(source_name)));
    std::lock_guard lock(s->mutex);
    s->ontology = ontology;
    return json_response(200, {{"source", ontology->source_name()},
                               {"class_count", ontology->classes().size()},
                               {"property_count", ontology->properties().size()},
                               {"diagnostics", to_json(ontology->diagnostics())}});
  });
}

ApiResponse Api::get_catalog(const std::string& session) {
  return guarded([&] {
    auto s = sessions_.get(session);
    std::shared_ptr<const Ontology> o;
    {
      std::lock_guard lock(s->mutex);
      require_ontology(*s);
      o = s->ontology;
    }
    return json_response(200, catalog_json(*o));
  });
}

ApiResponse Api::get_graph(const std::string& session) {
  return guarded([&] {
    auto s = sessions_.get(session);
    std::lock_guard lock(s->mutex);
    return json_response(200, graph_state(*s));
  });
}

ApiResponse Api::mutate_graph(const std::string& session, std::string_view body) {
  return guarded([&] {
    auto request = parse_body(body);
    auto s = sessions_.get(session);
    std::lock_guard lock(s->mutex);
    QueryGraph next = s->graph;
    apply_op(next, request);
    s->graph = std::move(next);
    return json_response(200, graph_state(*s));
  });
}

ApiResponse Api::execute(const std::string& session) {
  return guarded([&] {
    auto s = sessions_.get(session);
    SparqlQuery q;
    {
      std::lock_guard lock(s->mutex);
      q = translate(s->graph, require_ontology(*s));
    }
    BindingTable table = evaluate(q, *registry_);
    json vars = json::array();
    for (const auto& v : table.vars) vars.push_back("?" + v);
    json rows = json::array();
    for (const auto& row : table.rows) {
      json cells = json::array();
      for (const auto& term : row) {
        bool is_iri = std::holds_alternative<Iri>(term);
        cells.push_back({{"type", is_iri ? "iri" : "literal"},
                         {"value", is_iri ? std::get<Iri>(term).str() : std::get<Literal>(term).lexical},
                         {"text", term_to_sparql(term, q.prefixes)}});
      }
      rows.push_back(cells);
    }
    return json_response(200, {{"vars", vars}, {"rows", rows}, {"sparql", serialize(q)}});
  });
}

ApiResponse Api::save_document(const std::string& session) {
  return guarded([&] {
    auto s = sessions_.get(session);
    std::lock_guard lock(s->mutex);
    if (s->graph.nodes().empty()) {
      throw Error(ErrorCode::EmptyGraph, "nothing to save: the graph is empty");
    }
    QueryDocument d = make_document(s->graph, require_ontology(*s));
    return ApiResponse{200, "text/plain; charset=utf-8", oqb::save_document(d)};
  });
}

ApiResponse Api::load_document(const std::string& session, std::string_view body) {
  return guarded([&] {
    auto s = sessions_.get(session);
    std::lock_guard lock(s->mutex);
    QueryDocument d = oqb::load_document(body, s->graph.node_cap());
    std::vector<Diagnostic> warnings;
    if (s->ontology) {
      for (auto& diag : check_document(d, *s->ontology)) {
        if (diag.code == "SPARQL_MISMATCH") warnings.push_back(std::move(diag));
      }
    }
    s->graph = std::move(d.graph);
    json out = graph_state(*s);
    out["question"] = d.question;
    out["ontology_source"] = d.ontology_source;
    out["warnings"] = to_json(warnings);
    return json_response(200, out);
  });
}

}  // namespace oqb
