/*
 * Copyright (C) 2026 The agenthellm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
*/


#ifndef AGENTHELLM__SERVICE_HPP
#define AGENTHELLM__SERVICE_HPP

#include <agenthellm/asset_catalog.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace agenthellm {

struct ServiceConfig
{
  std::string host = "127.0.0.1";
  int port = 8787;

  std::size_t max_body_bytes = 4u << 20;
  std::size_t max_nodes = 1000;
  std::size_t max_edges = 10000;

  // Hard ceilings applied on top of each request's own bounds.
  int max_k = 50;
  std::int64_t max_cost = 200;
  int max_steps = 40;
  int max_trigger_depth = 16;
  std::size_t max_expansions = 500'000;

  AssetCatalog catalog = AssetCatalog::builtin();
};

struct HttpResponse
{
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
  std::vector<std::pair<std::string, std::string>> headers;
};

/// Stateless request handling for the workbench API. Every request carries
/// its own graph; nothing is stored between calls.
class AnalysisService
{
public:
  explicit AnalysisService(ServiceConfig config = {});

  const ServiceConfig& config() const noexcept { return _config; }

  /// Routes one request. `origin` is the Origin header, possibly empty.
  HttpResponse handle(std::string_view method,
                      std::string_view path,
                      std::string_view body,
                      std::string_view origin = {}) const;

  HttpResponse analyze(std::string_view body) const;
  HttpResponse validate(std::string_view body) const;
  HttpResponse catalog() const;

private:
  ServiceConfig _config;
};

/// True for http(s) origins on localhost, 127.0.0.1 or [::1].
bool is_loopback_origin(std::string_view origin);

/// cpp-httplib front end for AnalysisService.
class HttpServer
{
public:
  explicit HttpServer(AnalysisService service);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds to host:port (port 0 picks a free port); returns the bound port
  /// or -1 on failure.
  int bind(const std::string& host, int port);

  /// Serves until stop() is called.
  bool run();
  void stop();

private:
  struct Impl;
  std::unique_ptr<Impl> _impl;
};

} // namespace agenthellm

#endif // AGENTHELLM__SERVICE_HPP
