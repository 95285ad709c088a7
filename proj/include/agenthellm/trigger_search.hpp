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


#ifndef AGENTHELLM__TRIGGER_SEARCH_HPP
#define AGENTHELLM__TRIGGER_SEARCH_HPP

#include <agenthellm/graph.hpp>
#include <agenthellm/validation.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace agenthellm {

enum class TriggerKind : std::uint8_t
{
  Activation,
  Consumption,
  AutomaticWatch,
  AlreadyActive,
};

std::string_view to_string(TriggerKind kind) noexcept;

/// One compelled action inside a trigger chain. Edge orientation is kept:
/// for a read the actor is `from` and the datasource is `to`.
struct TriggerStep
{
  EdgeId edge;
  NodeId from;
  NodeId to;
  EdgeKind action = EdgeKind::Communicate;

  bool operator==(const TriggerStep&) const = default;
};

/// An auxiliary attack that compels a read (consumption) or a communicate
/// (channel activation). The last step of a searched chain is the compelled
/// goal action itself.
///
/// Costs are unit per step, except that the compelled communicate of an
/// activation chain is free: it is the channel opening the respond rides on.
/// A watch makes consumption cost exactly one (the implied read).
struct TriggerChain
{
  TriggerKind kind = TriggerKind::AlreadyActive;
  std::vector<TriggerStep> steps;
  std::int64_t total_cost = 0;

  bool operator==(const TriggerChain&) const = default;
};

using ChannelSet = std::set<Channel>;

inline constexpr int kDefaultTriggerDepth = 4;

class TriggerRequestError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Finds how to make `consumer` read `datasource`: automatically through a
/// watch, or through the shortest chain of influence from `attacker`.
///
/// `depth_budget` bounds the influence steps before the final read. Edges in
/// `banned` are never traversed. Respond edges are only usable when already
/// active in `channels`. Returns std::nullopt when unreachable.
///
/// Throws TriggerRequestError for unknown ids, wrong node kinds, or a consumer
/// without a read edge to the datasource.
std::optional<TriggerChain> resolve_consumption(
    const ThreatGraph& graph,
    const NodeId& attacker,
    const NodeId& consumer,
    const NodeId& datasource,
    int depth_budget = kDefaultTriggerDepth,
    const std::set<EdgeId>& banned = {},
    const ChannelSet& channels = {});

/// Finds how to open the conversation that `respond_edge` (X responds to Y)
/// needs, i.e. make Y communicate to X. AlreadyActive when (Y, X) is open.
std::optional<TriggerChain> resolve_activation(
    const ThreatGraph& graph,
    const NodeId& attacker,
    const EdgeId& respond_edge,
    const ChannelSet& channels,
    int depth_budget = kDefaultTriggerDepth,
    const std::set<EdgeId>& banned = {});

bool has_watch(const ThreatGraph& graph, const NodeId& actor, const NodeId& datasource);

namespace detail {

/// Channel pairs by node index, kept sorted.
using IndexChannels = std::vector<std::pair<std::size_t, std::size_t>>;

bool channel_open(const IndexChannels& channels, std::size_t initiator, std::size_t responder);

/// Index-based forms used by the planner. `banned` holds edge indices.
std::optional<TriggerChain> consumption_chain(
    const ThreatGraph& graph,
    std::size_t attacker,
    std::size_t consumer,
    std::size_t datasource,
    int depth_budget,
    std::span<const std::size_t> banned,
    const IndexChannels& channels);

std::optional<TriggerChain> activation_chain(
    const ThreatGraph& graph,
    std::size_t attacker,
    std::size_t respond_edge,
    int depth_budget,
    std::span<const std::size_t> banned,
    const IndexChannels& channels);

} // namespace detail

} // namespace agenthellm

#endif // AGENTHELLM__TRIGGER_SEARCH_HPP
