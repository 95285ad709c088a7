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


#ifndef AGENTHELLM__PLANNER_HPP
#define AGENTHELLM__PLANNER_HPP

#include <agenthellm/asset_catalog.hpp>
#include <agenthellm/graph.hpp>
#include <agenthellm/plan.hpp>
#include <agenthellm/trigger_search.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace agenthellm {

struct AnalysisRequest
{
  NodeId attacker;
  NodeId target;
  std::optional<std::string> target_asset;
  int k = 3;
  std::int64_t max_cost = 25;
  int max_steps = 12;
  int trigger_depth = kDefaultTriggerDepth;

  /// Count an unsolicited communicate into the target as a compromise. By
  /// default the target must consume the poison: read it from a datasource,
  /// or receive it as a response in a conversation it opened.
  bool accept_unsolicited = false;

  bool operator==(const AnalysisRequest&) const = default;
};

class RequestError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Throws RequestError unless the request is valid against `graph`.
void check_request(const ThreatGraph& graph, const AnalysisRequest& request);

struct SearchState
{
  NodeId frontier;
  ChannelSet channels;
  std::vector<AttackStep> steps;
  std::int64_t g_cost = 0;

  bool operator==(const SearchState&) const = default;
};

/// Attacker holding the poison, with the graph's declared initial channels.
SearchState initial_state(const ThreatGraph& graph, const AnalysisRequest& request);

inline constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

/// Lower bound on the remaining cost from each node to `target` in a relaxed
/// graph: every edge costs its base cost, respond edges need no channel, a
/// write reaches every reader of the datasource for free, and triggers are
/// ignored. Nodes that cannot reach the target map to kUnreachable.
std::map<NodeId, std::int64_t> precompute_heuristic(
    const ThreatGraph& graph, const NodeId& target);

/// True when `step` completes the attack for `request`.
bool is_goal_step(const AttackStep& step, const AnalysisRequest& request);

/// Every legal push-poison action from `state.frontier`, with its triggers
/// resolved. Write pushes yield one successor per reachable reader.
/// Successors beyond max_cost / max_steps are dropped.
std::vector<std::pair<AttackStep, SearchState>> expand_state(
    const ThreatGraph& graph,
    const SearchState& state,
    const AnalysisRequest& request);

struct PlannerOptions
{
  /// Hard ceiling on expanded states; the result is flagged as truncated.
  std::size_t max_expansions = 2'000'000;

  /// Maximum number of expanded arrivals per (frontier, channels) key.
  /// Defaults to k * max_steps, which dominance pruning never exceeds.
  std::optional<std::size_t> arrivals_cap;
};

struct PlannerStats
{
  std::size_t expanded = 0;
  std::size_t generated = 0;
  std::size_t pruned = 0;
  std::size_t arrivals_cap = 0;
  std::size_t max_arrivals_per_key = 0;

  /// Largest number of expansions with the same frontier node.
  std::size_t max_node_visits = 0;
  bool truncated = false;
};

struct PlanResult
{
  std::vector<AttackPath> plans;
  PlannerStats stats;
};

/// A* over poison paths. Returns at most k plans ordered by plan_less; the
/// first is cost-optimal within the bounds.
PlanResult plan_attacks_with_stats(
    const ThreatGraph& graph,
    const AnalysisRequest& request,
    const PlannerOptions& options = {});

std::vector<AttackPath> plan_attacks(
    const ThreatGraph& graph, const AnalysisRequest& request);

class OracleLimitError : public std::length_error
{
public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kOracleMaxNodes = 8;
inline constexpr std::size_t kOracleMaxEdges = 16;

/// Exhaustive depth-first enumeration of every plan within the bounds,
/// sorted by plan_less. Refuses graphs over 8 nodes or 16 edges.
std::vector<AttackPath> oracle_enumerate(
    const ThreatGraph& graph, const AnalysisRequest& request);

} // namespace agenthellm

#endif // AGENTHELLM__PLANNER_HPP
