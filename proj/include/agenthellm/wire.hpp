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


#ifndef AGENTHELLM__WIRE_HPP
#define AGENTHELLM__WIRE_HPP

#include <agenthellm/graph.hpp>
#include <agenthellm/planner.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace agenthellm {

/// A request body does not match the wire format.
class WireFormatError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Strict decoding of the AnalysisRequest fields: attacker and target are
/// required; asset, k, max_cost, max_steps, trigger_depth and
/// accept_unsolicited are optional. Unknown keys are rejected.
AnalysisRequest request_from_json(const nlohmann::json& doc);

/// Body of POST /api/v1/analyze: {"graph": <graph document>, "request": {...}}.
struct AnalyzeRequestWire
{
  ThreatGraph graph;
  AnalysisRequest request;
};

/// Throws WireFormatError, or GraphFormatError for a malformed graph.
AnalyzeRequestWire analyze_body_from_json(const nlohmann::json& doc);

} // namespace agenthellm

#endif // AGENTHELLM__WIRE_HPP
