// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#include "oqb/http_server.hpp"

#include <httplib.h>

namespace oqb {

namespace {

void reply(httplib::Response& res, const ApiResponse& r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

}  // namespace

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(Api& api, std::optional<std::filesystem::path> assets)
    : impl_(std::make_unique<Impl>()) {
  auto& svr = impl_->server;
  // httplib's default also sets SO_REUSEPORT, which would let two servers
  // share a port without either noticing.
  svr.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof(yes));
  });
  const std::string sid = "/api/sessions/([0-9a-f]+)";

  svr.Post("/api/sessions", [&api](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.create_session(req.body));
  });
  svr.Post(sid + "/ontology", [&api](const httplib::Request& req, httplib::Response& res) {
    std::string name = req.has_param("name") ? req.get_param_value("name") : "upload.owl";
    reply(res, api.upload_ontology(req.matches[1], req.body, name));
  });
  svr.Get(sid + "/catalog", [&api](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.get_catalog(req.matches[1]));
  });
  svr.Get(sid + "/graph", [&api](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.get_graph(req.matches[1]));
  });
  svr.Post(sid + "/graph", [&api](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.mutate_graph(req.matches[1], req.body));
  });
  svr.Post(sid + "/execute", [&api](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.execute(req.matches[1]));
  });
  svr.Get(sid + "/document", [&api](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.save_document(req.matches[1]));
  });
  svr.Put(sid + "/document", [&api](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.load_document(req.matches[1], req.body));
  });
  if (assets) svr.set_mount_point("/", assets->string());
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

bool HttpServer::is_running() const { return impl_->server.is_running(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace oqb
