// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include "oqb/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <set>

#include "oqb/document.hpp"
#include "oqb/error.hpp"
#include "oqb/http_server.hpp"
#include "oqb/ontology.hpp"
#include "oqb/service.hpp"

namespace oqb {

std::string format_table(const BindingTable& table, const NamespaceTable& prefixes) {
  std::string out;
  for (std::size_t i = 0; i < table.vars.size(); ++i) {
    if (i > 0) out += '\t';
    out += "?" + table.vars[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += '\t';
      out += term_to_sparql(row[i], prefixes);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out.flush()) throw Error(ErrorCode::IoFailure, "cannot write " + path);
}

void print_diagnostics(const std::vector<Diagnostic>& ds, std::ostream& err) {
  for (const auto& d : ds) err << format_diagnostic(d) << '\n';
}

Ontology read_ontology(const std::string& path, std::ostream& err) {
  Ontology o = load_ontology_file(path);
  print_diagnostics(o.diagnostics(), err);
  return o;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// inspect -------------------------------------------------------------------

void print_tree(const Ontology& o, std::ostream& out) {
  std::map<Iri, std::vector<Iri>> children;
  std::vector<Iri> roots;
  for (const auto& c : list_classes(o)) {
    if (c.parents.empty()) roots.push_back(c.iri);
    for (const auto& p : c.parents) children[p].push_back(c.iri);
  }
  auto by_name = [&o](std::vector<Iri>& v) {
    std::sort(v.begin(), v.end(),
              [&o](const Iri& a, const Iri& b) { return short_name(o, a) < short_name(o, b); });
  };
  by_name(roots);
  for (auto& [parent, kids] : children) by_name(kids);

  std::function<void(const Iri&, std::size_t)> walk = [&](const Iri& cls, std::size_t depth) {
    out << std::string(depth * 2, ' ') << short_name(o, cls) << '\n';
    auto it = children.find(cls);
    if (it == children.end()) return;
    for (const auto& kid : it->second) walk(kid, depth + 1);
  };
  for (const auto& r : roots) walk(r, 0);
}

void print_classes(const Ontology& o, std::ostream& out) {
  for (const auto& c : list_classes(o)) out << short_name(o, c.iri) << '\n';
}

void print_properties(const Ontology& o, std::ostream& out) {
  auto join = [&o](const std::set<Iri>& iris) {
    std::string s;
    for (const auto& iri : iris) s += (s.empty() ? "" : ",") + short_name(o, iri);
    return s.empty() ? std::string("-") : s;
  };
  for (const auto& p : list_properties(o)) {
    out << short_name(o, p.iri) << '\t' << to_string(p.kind) << '\t' << join(p.domains) << '\t'
        << join(p.ranges) << '\n';
  }
}

// serve ---------------------------------------------------------------------

std::atomic<HttpServer*> g_running_server{nullptr};

extern "C" void handle_stop_signal(int) {
  if (HttpServer* s = g_running_server.load()) s->stop();
}

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string registry;
  std::string assets;
  long session_ttl = 3600;
  std::size_t node_cap = kDefaultNodeCap;
};

int serve(const ServeOptions& opt, std::ostream& out, std::ostream& err) {
  auto registry = std::make_shared<TripleStore>();
  if (!opt.registry.empty()) {
    std::ifstream in(opt.registry, std::ios::binary);
    if (!in) {
      err << "error: cannot read registry " << opt.registry << '\n';
      return kExitDomainError;
    }
    *registry = load_ntriples(in);
  }
  if (opt.node_cap == 0) throw Error(ErrorCode::BadRequest, "--node-cap must be positive");

  Api api(registry, ServiceConfig{opt.node_cap, std::chrono::seconds(opt.session_ttl)});
  std::optional<std::filesystem::path> assets;
  if (!opt.assets.empty()) assets = opt.assets;
  HttpServer server(api, assets);
  int port = server.bind(opt.host, opt.port);
  if (port < 0) {
    err << "error: cannot bind " << opt.host << ":" << opt.port << '\n';
    return kExitDomainError;
  }
  out << "listening on http://" << opt.host << ":" << port << " (" << registry->size()
      << " registry triples)" << std::endl;

  g_running_server = &server;
  auto previous_int = std::signal(SIGINT, handle_stop_signal);
  auto previous_term = std::signal(SIGTERM, handle_stop_signal);
  bool ok = server.listen();
  std::signal(SIGINT, previous_int);
  std::signal(SIGTERM, previous_term);
  g_running_server = nullptr;
  return ok ? kExitOk : kExitDomainError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build, translate and run graph-drawn SPARQL queries", "oqb"};
  app.require_subcommand(1);

  std::string owl_path;
  bool want_classes = false;
  bool want_properties = false;
  bool want_tree = false;
  auto* inspect = app.add_subcommand("inspect", "List the classes and properties of an OWL file");
  inspect->add_option("owl", owl_path, "RDF/XML ontology")->required();
  auto* classes_flag = inspect->add_flag("--classes", want_classes, "Sorted class list");
  auto* properties_flag = inspect->add_flag("--properties", want_properties, "Sorted property list");
  auto* tree_flag = inspect->add_flag("--tree", want_tree, "Indented subclass hierarchy");
  classes_flag->excludes(properties_flag)->excludes(tree_flag);
  properties_flag->excludes(tree_flag);

  std::string doc_path;
  std::string ontology_path;
  std::string out_path;
  auto* translate_cmd = app.add_subcommand("translate", "Translate a query document to SPARQL");
  translate_cmd->add_option("document", doc_path, "Query document (.oqb)")->required();
  translate_cmd->add_option("--ontology", ontology_path, "Ontology to validate against")->required();
  translate_cmd->add_option("-o,--output", out_path, "Write SPARQL here instead of stdout");

  std::string query_path;
  std::string data_path;
  std::string run_ontology;
  auto* run_cmd = app.add_subcommand("run", "Execute a query document or .rq file against N-Triples data");
  run_cmd->add_option("query", query_path, "Query document (.oqb) or SPARQL (.rq)")->required();
  run_cmd->add_option("--data", data_path, "N-Triples registry")->required();
  run_cmd->add_option("--ontology", run_ontology, "Ontology (required for .oqb input)");

  ServeOptions serve_opt;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--host", serve_opt.host, "Listen address")->envname("OQB_HOST");
  serve_cmd->add_option("--port", serve_opt.port, "Listen port (0 picks a free one)")->envname("OQB_PORT");
  serve_cmd->add_option("--registry", serve_opt.registry, "N-Triples registry loaded at start")
      ->envname("OQB_REGISTRY");
  serve_cmd->add_option("--assets", serve_opt.assets, "Static UI bundle directory")->envname("OQB_ASSETS");
  serve_cmd->add_option("--session-ttl", serve_opt.session_ttl, "Idle session expiry in seconds")
      ->envname("OQB_SESSION_TTL");
  serve_cmd->add_option("--node-cap", serve_opt.node_cap, "Default node cap for new sessions")
      ->envname("OQB_NODE_CAP");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (inspect->parsed()) {
      Ontology o = read_ontology(owl_path, err);
      if (want_tree) {
        print_tree(o, out);
      } else if (want_classes) {
        print_classes(o, out);
      } else if (want_properties) {
        print_properties(o, out);
      } else {
        out << "# classes (" << o.classes().size() << ")\n";
        print_classes(o, out);
        out << "# properties (" << o.properties().size() << ")\n";
        print_properties(o, out);
      }
      return kExitOk;
    }

    if (translate_cmd->parsed()) {
      Ontology o = read_ontology(ontology_path, err);
      QueryDocument d = load_document_file(doc_path);
      auto diagnostics = check_document(d, o);
      print_diagnostics(diagnostics, err);
      if (has_errors(diagnostics)) return kExitDomainError;
      std::string text = serialize(translate(d.graph, o));
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
      }
      return kExitOk;
    }

    if (run_cmd->parsed()) {
      SparqlQuery q;
      if (ends_with(query_path, ".rq") || ends_with(query_path, ".sparql")) {
        q = parse_sparql(read_file(query_path));
      } else {
        if (run_ontology.empty()) {
          err << "error: --ontology is required for query documents\n";
          return kExitUsage;
        }
        Ontology o = read_ontology(run_ontology, err);
        QueryDocument d = load_document_file(query_path);
        auto diagnostics = check_document(d, o);
        print_diagnostics(diagnostics, err);
        if (has_errors(diagnostics)) return kExitDomainError;
        q = translate(d.graph, o);
      }
      std::string data = read_file(data_path);
      TripleStore store = load_ntriples(std::string_view(data));
      out << format_table(evaluate(q, store), q.prefixes);
      return kExitOk;
    }

    if (serve_cmd->parsed()) return serve(serve_opt, out, err);
  } catch (const ValidationFailed& e) {
    print_diagnostics(e.diagnostics(), err);
    return kExitDomainError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::IoFailure ? kExitUsage : kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace oqb
