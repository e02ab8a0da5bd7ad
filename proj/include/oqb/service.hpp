// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_SERVICE_HPP
#define OQB_SERVICE_HPP

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "oqb/error.hpp"
#include "oqb/ontology.hpp"
#include "oqb/query_graph.hpp"
#include "oqb/triple_store.hpp"

namespace oqb {

struct ServiceConfig {
  std::size_t node_cap = kDefaultNodeCap;
  std::chrono::seconds session_ttl{3600};
};

using Clock = std::chrono::steady_clock;

struct Session {
  std::string id;
  std::shared_ptr<const Ontology> ontology;
  QueryGraph graph;
  Clock::time_point created_at;
  Clock::time_point last_used;
  std::mutex mutex;  // serializes every request touching this session

  Session(std::string session_id, std::size_t node_cap, Clock::time_point now)
      : id(std::move(session_id)), graph(node_cap), created_at(now), last_used(now) {}
};

/// In-memory sessions with idle expiry. Thread safe; callers lock
/// Session::mutex themselves while using a session.
class SessionStore {
 public:
  explicit SessionStore(std::chrono::seconds ttl, std::function<Clock::time_point()> now = Clock::now);

  std::shared_ptr<Session> create(std::size_t node_cap);

  /// Returns the live session and refreshes its idle timer. Throws
  /// Error(SessionNotFound) for unknown or expired ids.
  std::shared_ptr<Session> get(const std::string& id);

  std::size_t size();

 private:
  void sweep(Clock::time_point now);
  std::string fresh_id();

  std::chrono::seconds ttl_;
  std::function<Clock::time_point()> now_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
  std::uint64_t salt_;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;

  nlohmann::json json() const { return nlohmann::json::parse(body); }
};

/// Transport-independent implementation of every HTTP endpoint. Bodies and
/// field names are documented in docs/api.md. The registry is shared
/// read-only by all sessions.
class Api {
 public:
  Api(std::shared_ptr<const TripleStore> registry, ServiceConfig config,
      std::function<Clock::time_point()> now = Clock::now);

  ApiResponse create_session(std::string_view body = {});
  ApiResponse upload_ontology(const std::string& session, std::string_view owl,
                              std::string source_name);
  ApiResponse get_catalog(const std::string& session);
  ApiResponse get_graph(const std::string& session);
  ApiResponse mutate_graph(const std::string& session, std::string_view body);
  ApiResponse execute(const std::string& session);
  ApiResponse save_document(const std::string& session);
  ApiResponse load_document(const std::string& session, std::string_view body);

  SessionStore& sessions() noexcept { return sessions_; }

 private:
  template <typename F>
  ApiResponse guarded(F&& handler);

  std::shared_ptr<const TripleStore> registry_;
  ServiceConfig config_;
  SessionStore sessions_;
};

/// JSON encodings shared by the service and its tests.
nlohmann::json to_json(const Diagnostic& d);
nlohmann::json to_json(const std::vector<Diagnostic>& ds);
nlohmann::json to_json(const QueryGraph& g);
nlohmann::json catalog_json(const Ontology& o);

/// "CapExceeded" -> "CAP_EXCEEDED".
std::string api_error_code(ErrorCode code);
int http_status_for(ErrorCode code);

}  // namespace oqb

#endif  // OQB_SERVICE_HPP
