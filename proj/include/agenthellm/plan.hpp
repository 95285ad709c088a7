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


#ifndef AGENTHELLM__PLAN_HPP
#define AGENTHELLM__PLAN_HPP

#include <agenthellm/graph.hpp>
#include <agenthellm/trigger_search.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace agenthellm {

/// Cost of one attack step, split by phase.
struct CostBreakdown
{
  std::int64_t push_poison = 0;
  std::int64_t activation_trigger = 0;
  std::int64_t consumption_trigger = 0;
  std::int64_t total = 0;

  static CostBreakdown of(std::int64_t push, std::int64_t activation,
                          std::int64_t consumption)
  {
    return {push, activation, consumption, push + activation + consumption};
  }

  bool balanced() const noexcept
  {
    return total == push_poison + activation_trigger + consumption_trigger;
  }

  bool operator==(const CostBreakdown&) const = default;
};

/// The required action of a step that moves the payload.
struct PushAction
{
  EdgeId edge;
  EdgeKind kind = EdgeKind::Communicate;
  NodeId from;
  NodeId to;

  bool operator==(const PushAction&) const = default;
};

struct AttackStep
{
  PushAction push;
  std::optional<TriggerChain> activation;  // respond pushes only
  std::optional<TriggerChain> consumption; // write pushes only
  CostBreakdown cost;

  /// Actor holding live poison after the step: the push target, or for a
  /// write the actor that consumes it.
  NodeId holder;
  std::string narrative;

  bool operator==(const AttackStep&) const = default;
};

struct AttackPath
{
  std::vector<AttackStep> steps;
  std::int64_t total_cost = 0;
  NodeId attacker;
  NodeId target;
  std::optional<std::string> target_asset;
  int rank = 0;

  bool operator==(const AttackPath&) const = default;
};

/// Template sentence for a step, e.g. "attacker communicates with car_agent".
std::string narrate(const AttackStep& step);

/// Ranking order: total cost, then fewer steps, then the per-step sequence of
/// (push edge id, holder id) compared lexicographically.
bool plan_less(const AttackPath& a, const AttackPath& b);

/// True when both plans take the same actions (ignores rank and narrative).
bool same_actions(const AttackPath& a, const AttackPath& b);

} // namespace agenthellm

#endif // AGENTHELLM__PLAN_HPP
