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


#include <agenthellm/wire.hpp>

#include <agenthellm/graph_io.hpp>

#include <set>

namespace agenthellm {

namespace {

template<typename T>
T integer_field(const nlohmann::json& doc, const char* key, T fallback)
{
  if (!doc.contains(key))
    return fallback;
  const auto& v = doc[key];
  if (!v.is_number_integer())
    throw WireFormatError(std::string("request.") + key + " must be an integer");
  return v.get<T>();
}

std::string string_field(const nlohmann::json& doc, const char* key)
{
  if (!doc.contains(key))
    throw WireFormatError(std::string("request.") + key + " is required");
  if (!doc[key].is_string())
    throw WireFormatError(std::string("request.") + key + " must be a string");
  return doc[key].get<std::string>();
}

} // anonymous namespace

AnalysisRequest request_from_json(const nlohmann::json& doc)
{
  if (!doc.is_object())
    throw WireFormatError("request must be an object");

  static const std::set<std::string> keys = {
    "attacker", "target", "asset", "k", "max_cost", "max_steps",
    "trigger_depth", "accept_unsolicited"};
  for (const auto& [key, _] : doc.items())
  {
    if (!keys.contains(key))
      throw WireFormatError("unknown request key '" + key + "'");
  }

  AnalysisRequest r;
  r.attacker = NodeId(string_field(doc, "attacker"));
  r.target = NodeId(string_field(doc, "target"));
  if (doc.contains("asset") && !doc["asset"].is_null())
  {
    if (!doc["asset"].is_string())
      throw WireFormatError("request.asset must be a string or null");
    r.target_asset = doc["asset"].get<std::string>();
  }
  r.k = integer_field(doc, "k", r.k);
  r.max_cost = integer_field(doc, "max_cost", r.max_cost);
  r.max_steps = integer_field(doc, "max_steps", r.max_steps);
  r.trigger_depth = integer_field(doc, "trigger_depth", r.trigger_depth);
  if (doc.contains("accept_unsolicited"))
  {
    if (!doc["accept_unsolicited"].is_boolean())
      throw WireFormatError("request.accept_unsolicited must be a boolean");
    r.accept_unsolicited = doc["accept_unsolicited"].get<bool>();
  }
  return r;
}

AnalyzeRequestWire analyze_body_from_json(const nlohmann::json& doc)
{
  if (!doc.is_object())
    throw WireFormatError("body must be an object");
  for (const auto& [key, _] : doc.items())
  {
    if (key != "graph" && key != "request")
      throw WireFormatError("unknown body key '" + key + "'");
  }
  if (!doc.contains("graph"))
    throw WireFormatError("body.graph is required");
  if (!doc.contains("request"))
    throw WireFormatError("body.request is required");

  return AnalyzeRequestWire{graph_from_json(doc["graph"]), request_from_json(doc["request"])};
}

} // namespace agenthellm
