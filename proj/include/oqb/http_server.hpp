// Copyright 2026 The oqb Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OQB_HTTP_SERVER_HPP
#define OQB_HTTP_SERVER_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "oqb/service.hpp"

namespace oqb {

/// Binds Api to HTTP routes. Static assets, when given, are served from "/".
class HttpServer {
 public:
  explicit HttpServer(Api& api, std::optional<std::filesystem::path> assets = std::nullopt);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Port 0 picks a free port. Returns the bound port, or -1 on failure.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called. Returns false when serving failed.
  bool listen();
  void stop();
  bool is_running() const;
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace oqb

#endif  // OQB_HTTP_SERVER_HPP
