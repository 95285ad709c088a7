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


#ifndef AGENTHELLM_TESTS__BRUTE_FORCE_HPP
#define AGENTHELLM_TESTS__BRUTE_FORCE_HPP

#include <agenthellm/planner.hpp>

#include <optional>
#include <set>
#include <vector>

namespace agenthellm::testing {

/// Exhaustive trigger search: enumerates every influence walk of at most
/// `depth` steps and keeps the shortest, then lexicographically smallest.
std::optional<TriggerChain> brute_consumption(
    const ThreatGraph& graph,
    const NodeId& attacker,
    const NodeId& consumer,
    const NodeId& datasource,
    int depth,
    const std::set<EdgeId>& banned,
    const ChannelSet& channels);

std::optional<TriggerChain> brute_activation(
    const ThreatGraph& graph,
    const NodeId& attacker,
    const EdgeId& respond_edge,
    int depth,
    const std::set<EdgeId>& banned,
    const ChannelSet& channels);

struct BruteStep
{
  EdgeId push;
  NodeId holder;
  CostBreakdown cost;
  std::optional<TriggerChain> trigger;

  bool operator==(const BruteStep&) const = default;
};

struct BrutePlan
{
  std::vector<BruteStep> steps;
  std::int64_t cost = 0;

  bool operator==(const BrutePlan&) const = default;
};

/// Every plan within the request bounds sorted by (cost, steps, sequence of
/// (push edge id, holder id)).
std::vector<BrutePlan> brute_plans(const ThreatGraph& graph, const AnalysisRequest& request);

/// Projection of a planner result onto the brute-force representation.
BrutePlan project(const AttackPath& path);

} // namespace agenthellm::testing

#endif // AGENTHELLM_TESTS__BRUTE_FORCE_HPP
