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


#ifndef AGENTHELLM__RENDER_HPP
#define AGENTHELLM__RENDER_HPP

#include <agenthellm/graph.hpp>
#include <agenthellm/plan.hpp>
#include <agenthellm/planner.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace agenthellm {

enum class ActionPhase : std::uint8_t { Activation, Push, Consumption };

std::string_view to_string(ActionPhase phase) noexcept;

/// One atomic action of a plan, in execution order.
struct NumberedAction
{
  int number = 0;
  std::size_t step = 0; // 0-based step index
  ActionPhase phase = ActionPhase::Push;
  EdgeId edge;
  EdgeKind kind = EdgeKind::Communicate;
  NodeId from;
  NodeId to;
  std::int64_t cost = 0;
  bool by_watch = false;

  bool operator==(const NumberedAction&) const = default;
};

/// Flat 1..A numbering: within each step, activation actions, then the push,
/// then consumption actions. A reused edge gets one number per use.
std::vector<NumberedAction> number_actions(const AttackPath& path);

/// One line per numbered action plus a cost footer.
std::string render_text(const AttackPath& path);

/// All ranked plans, or the "no attack path found" sentinel line.
std::string render_text(std::span<const AttackPath> plans);

/// The whole graph in DOT; edges used by `path` carry their action numbers
/// and are highlighted. Throws std::invalid_argument if the path uses an edge
/// the graph does not have.
std::string render_dot(const ThreatGraph& graph, const AttackPath* path = nullptr);

inline constexpr int kReportVersion = 1;
inline constexpr const char* kReportSchema = "agenthellm/report";

nlohmann::ordered_json request_to_json(const AnalysisRequest& request);

/// Machine-readable report with the ranked plans, their nested trigger
/// chains, cost breakdowns and numbered actions.
nlohmann::ordered_json render_report(
    std::span<const AttackPath> plans,
    const ThreatGraph& graph,
    const AnalysisRequest& request,
    bool truncated = false);

/// Structural and arithmetic checks of a report document; empty when valid.
std::vector<std::string> validate_report(const nlohmann::json& report);

} // namespace agenthellm

#endif // AGENTHELLM__RENDER_HPP
