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


#include <agenthellm/service.hpp>

#include <agenthellm/graph_io.hpp>
#include <agenthellm/planner.hpp>
#include <agenthellm/render.hpp>
#include <agenthellm/validation.hpp>
#include <agenthellm/wire.hpp>

#include <httplib.h>

#include <algorithm>
#include <regex>

namespace agenthellm {

namespace {

HttpResponse json_response(int status, const nlohmann::ordered_json& body)
{
  HttpResponse r;
  r.status = status;
  r.body = body.dump(2) + "\n";
  return r;
}

HttpResponse error_response(int status, const std::string& message)
{
  return json_response(status, {{"error", message}});
}

HttpResponse unprocessable(const std::string& message, const ValidationReport& report)
{
  auto body = report_to_json(report);
  nlohmann::ordered_json out;
  out["error"] = message;
  out["valid"] = false;
  out["violations"] = body["violations"];
  return json_response(422, out);
}

std::optional<nlohmann::json> parse_body(std::string_view body, HttpResponse& error)
{
  auto doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded())
  {
    error = error_response(400, "request body is not valid JSON");
    return std::nullopt;
  }
  return doc;
}

} // anonymous namespace

bool is_loopback_origin(std::string_view origin)
{
  static const std::regex pattern(
      R"(^https?://(localhost|127\.0\.0\.1|\[::1\])(:[0-9]{1,5})?$)");
  return std::regex_match(origin.begin(), origin.end(), pattern);
}

//==============================================================================
AnalysisService::AnalysisService(ServiceConfig config)
: _config(std::move(config))
{
}

HttpResponse AnalysisService::handle(
    std::string_view method,
    std::string_view path,
    std::string_view body,
    std::string_view origin) const
{
  HttpResponse response;
  const bool is_post = method == "POST";
  const bool is_get = method == "GET";

  if (method == "OPTIONS")
  {
    response.status = 204;
    response.content_type.clear();
    if (is_loopback_origin(origin))
    {
      response.headers.emplace_back("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      response.headers.emplace_back("Access-Control-Allow-Headers", "Content-Type");
    }
  }
  else if (path == "/api/v1/analyze")
    response = is_post ? analyze(body) : error_response(405, "use POST");
  else if (path == "/api/v1/validate")
    response = is_post ? validate(body) : error_response(405, "use POST");
  else if (path == "/api/v1/catalog")
    response = is_get ? catalog() : error_response(405, "use GET");
  else
    response = error_response(404, "no such endpoint");

  if (is_loopback_origin(origin))
  {
    response.headers.emplace_back("Access-Control-Allow-Origin", std::string(origin));
    response.headers.emplace_back("Vary", "Origin");
  }
  return response;
}

HttpResponse AnalysisService::analyze(std::string_view body) const
{
  if (body.size() > _config.max_body_bytes)
    return error_response(413, "request body exceeds the configured limit");

  HttpResponse error;
  const auto doc = parse_body(body, error);
  if (!doc)
    return error;

  AnalyzeRequestWire wire;
  try
  {
    wire = analyze_body_from_json(*doc);
  }
  catch (const std::exception& e)
  {
    return error_response(400, e.what());
  }

  if (wire.graph.nodes().size() > _config.max_nodes
      || wire.graph.edges().size() > _config.max_edges)
    return error_response(413, "graph exceeds the configured size limits");

  const auto report = validate_graph(wire.graph, _config.catalog);
  if (!report.ok())
    return unprocessable("graph is invalid", report);

  auto request = wire.request;
  request.k = std::min(request.k, _config.max_k);
  request.max_cost = std::min(request.max_cost, _config.max_cost);
  request.max_steps = std::min(request.max_steps, _config.max_steps);
  request.trigger_depth = std::min(request.trigger_depth, _config.max_trigger_depth);

  try
  {
    PlannerOptions options;
    options.max_expansions = _config.max_expansions;
    const auto result = plan_attacks_with_stats(wire.graph, request, options);
    return json_response(
        200, render_report(result.plans, wire.graph, request, result.stats.truncated));
  }
  catch (const RequestError& e)
  {
    nlohmann::ordered_json out;
    out["error"] = std::string("invalid analysis request: ") + e.what();
    out["valid"] = false;
    out["violations"] = nlohmann::ordered_json::array(
        {{{"code", "INVALID_REQUEST"}, {"id", ""}, {"message", e.what()}}});
    return json_response(422, out);
  }
}

HttpResponse AnalysisService::validate(std::string_view body) const
{
  if (body.size() > _config.max_body_bytes)
    return error_response(413, "request body exceeds the configured limit");

  HttpResponse error;
  const auto doc = parse_body(body, error);
  if (!doc)
    return error;

  try
  {
    const auto graph = graph_from_json(*doc);
    return json_response(200, report_to_json(validate_graph(graph, _config.catalog)));
  }
  catch (const GraphFormatError& e)
  {
    return error_response(400, e.what());
  }
}

HttpResponse AnalysisService::catalog() const
{
  HttpResponse r;
  r.body = serialize_catalog(_config.catalog);
  return r;
}

//==============================================================================
struct HttpServer::Impl
{
  explicit Impl(AnalysisService s) : service(std::move(s)) {}

  void route(const httplib::Request& req, httplib::Response& res) const
  {
    const auto origin = req.get_header_value("Origin");
    const auto out = service.handle(req.method, req.path, req.body, origin);
    res.status = out.status;
    for (const auto& [k, v] : out.headers)
      res.set_header(k, v);
    if (!out.content_type.empty())
      res.set_content(out.body, out.content_type);
  }

  AnalysisService service;
  httplib::Server server;
};

HttpServer::HttpServer(AnalysisService service)
: _impl(std::make_unique<Impl>(std::move(service)))
{
  auto& s = _impl->server;
  s.set_payload_max_length(_impl->service.config().max_body_bytes);
  auto handler = [impl = _impl.get()](const httplib::Request& req, httplib::Response& res)
  {
    impl->route(req, res);
  };
  s.Get(".*", handler);
  s.Post(".*", handler);
  s.Options(".*", handler);
}

HttpServer::~HttpServer()
{
  stop();
}

int HttpServer::bind(const std::string& host, int port)
{
  if (port == 0)
    return _impl->server.bind_to_any_port(host);
  return _impl->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::run()
{
  return _impl->server.listen_after_bind();
}

void HttpServer::stop()
{
  if (_impl)
    _impl->server.stop();
}

} // namespace agenthellm
