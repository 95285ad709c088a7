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


#include <agenthellm/trigger_search.hpp>

#include <algorithm>
#include <deque>
#include <limits>

namespace agenthellm {

std::string_view to_string(TriggerKind kind) noexcept
{
  switch (kind)
  {
    case TriggerKind::Activation: return "activation";
    case TriggerKind::Consumption: return "consumption";
    case TriggerKind::AutomaticWatch: return "automatic_watch";
    case TriggerKind::AlreadyActive: return "already_active";
  }
  return "?";
}

namespace detail {

bool channel_open(
    const IndexChannels& channels, std::size_t initiator, std::size_t responder)
{
  return std::binary_search(
      channels.begin(), channels.end(), std::make_pair(initiator, responder));
}

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

/// Unit-step influence graph over actors and datasources. From an actor,
/// influence spreads along communicate edges, respond edges whose channel is
/// open, and writes; from a datasource it spreads to every watcher through
/// the watcher's read edge.
class InfluenceGraph
{
public:
  struct Hop
  {
    std::size_t edge;
    std::size_t next;
  };

  InfluenceGraph(
      const ThreatGraph& graph,
      std::span<const std::size_t> banned,
      const IndexChannels& channels)
  : _g(graph), _banned(banned), _channels(channels)
  {
  }

  bool banned(std::size_t e) const
  {
    return std::find(_banned.begin(), _banned.end(), e) != _banned.end();
  }

  /// Forward hops out of `n`, ascending by edge id.
  std::vector<Hop> forward(std::size_t n) const
  {
    std::vector<Hop> hops;
    if (_g.node_at(n).kind == NodeKind::Actor)
    {
      for (const auto e : _g.out_edges(n))
      {
        if (!usable_from_actor(e))
          continue;
        hops.push_back({e, _g.node_index(_g.edge_at(e).to)});
      }
    }
    else
    {
      for (const auto e : _g.in_edges(n))
      {
        if (!usable_watch_read(e))
          continue;
        hops.push_back({e, _g.node_index(_g.edge_at(e).from)});
      }
    }
    return hops;
  }

  /// Predecessors of `n`: pairs (edge, previous node).
  std::vector<Hop> backward(std::size_t n) const
  {
    std::vector<Hop> hops;
    if (_g.node_at(n).kind == NodeKind::Actor)
    {
      for (const auto e : _g.in_edges(n))
      {
        if (usable_from_actor(e))
          hops.push_back({e, _g.node_index(_g.edge_at(e).from)});
      }
      for (const auto e : _g.out_edges(n))
      {
        if (usable_watch_read(e))
          hops.push_back({e, _g.node_index(_g.edge_at(e).to)});
      }
    }
    else
    {
      for (const auto e : _g.in_edges(n))
      {
        if (!banned(e) && _g.edge_at(e).kind == EdgeKind::Write)
          hops.push_back({e, _g.node_index(_g.edge_at(e).from)});
      }
    }
    return hops;
  }

  /// Distance (in unit steps) from every node to `goal`.
  std::vector<int> distances_to(std::size_t goal) const
  {
    std::vector<int> dist(_g.nodes().size(), kUnreached);
    std::deque<std::size_t> queue;
    dist[goal] = 0;
    queue.push_back(goal);
    while (!queue.empty())
    {
      const auto n = queue.front();
      queue.pop_front();
      for (const auto& hop : backward(n))
      {
        if (dist[hop.next] != kUnreached)
          continue;
        dist[hop.next] = dist[n] + 1;
        queue.push_back(hop.next);
      }
    }
    return dist;
  }

  /// Lexicographically smallest shortest walk from `start` to `goal`.
  std::optional<std::vector<std::size_t>> shortest(
      std::size_t start, std::size_t goal, int budget) const
  {
    const auto dist = distances_to(goal);
    if (dist[start] == kUnreached || dist[start] > budget)
      return std::nullopt;

    std::vector<std::size_t> edges;
    auto n = start;
    while (n != goal)
    {
      for (const auto& hop : forward(n))
      {
        if (dist[hop.next] == dist[n] - 1)
        {
          edges.push_back(hop.edge);
          n = hop.next;
          break;
        }
      }
    }
    return edges;
  }

private:
  bool usable_from_actor(std::size_t e) const
  {
    if (banned(e))
      return false;
    const auto& edge = _g.edge_at(e);
    switch (edge.kind)
    {
      case EdgeKind::Communicate:
      case EdgeKind::Write:
        return true;
      case EdgeKind::Respond:
        // X responds to Y only inside a conversation Y opened.
        return channel_open(
            _channels, _g.node_index(edge.to), _g.node_index(edge.from));
      case EdgeKind::Read:
        return false;
    }
    return false;
  }

  bool usable_watch_read(std::size_t e) const
  {
    if (banned(e))
      return false;
    const auto& edge = _g.edge_at(e);
    if (edge.kind != EdgeKind::Read)
      return false;
    return _g.has_watch(_g.node_index(edge.from), _g.node_index(edge.to));
  }

  const ThreatGraph& _g;
  std::span<const std::size_t> _banned;
  const IndexChannels& _channels;
};

TriggerStep make_step(const ThreatGraph& g, std::size_t e)
{
  const auto& edge = g.edge_at(e);
  return TriggerStep{edge.id, edge.from, edge.to, edge.kind};
}

/// Smallest unbanned edge of `kind` from `from` to `to`.
std::optional<std::size_t> goal_edge(
    const ThreatGraph& g,
    const InfluenceGraph& influence,
    std::size_t from,
    std::size_t to,
    EdgeKind kind)
{
  for (const auto e : g.out_edges(from))
  {
    const auto& edge = g.edge_at(e);
    if (edge.kind == kind && g.node_index(edge.to) == to && !influence.banned(e))
      return e;
  }
  return std::nullopt;
}

/// Shortest chain from `attacker` that makes `actor` perform `goal`.
std::optional<TriggerChain> compel(
    const ThreatGraph& g,
    const InfluenceGraph& influence,
    std::size_t attacker,
    std::size_t actor,
    std::size_t goal,
    int depth_budget,
    TriggerKind kind)
{
  const auto prefix = influence.shortest(attacker, actor, depth_budget);
  if (!prefix)
    return std::nullopt;

  TriggerChain chain;
  chain.kind = kind;
  for (const auto e : *prefix)
    chain.steps.push_back(make_step(g, e));
  chain.steps.push_back(make_step(g, goal));

  const auto n = static_cast<std::int64_t>(chain.steps.size());
  chain.total_cost = kind == TriggerKind::Activation ? n - 1 : n;
  return chain;
}

} // anonymous namespace

//==============================================================================
std::optional<TriggerChain> consumption_chain(
    const ThreatGraph& graph,
    std::size_t attacker,
    std::size_t consumer,
    std::size_t datasource,
    int depth_budget,
    std::span<const std::size_t> banned,
    const IndexChannels& channels)
{
  const InfluenceGraph influence(graph, banned, channels);
  const auto read = goal_edge(graph, influence, consumer, datasource, EdgeKind::Read);
  if (!read)
    return std::nullopt;

  if (graph.has_watch(consumer, datasource))
  {
    return TriggerChain{
      TriggerKind::AutomaticWatch, {make_step(graph, *read)}, 1};
  }

  return compel(graph, influence, attacker, consumer, *read, depth_budget,
                TriggerKind::Consumption);
}

std::optional<TriggerChain> activation_chain(
    const ThreatGraph& graph,
    std::size_t attacker,
    std::size_t respond_edge,
    int depth_budget,
    std::span<const std::size_t> banned,
    const IndexChannels& channels)
{
  const auto& respond = graph.edge_at(respond_edge);
  const auto responder = graph.node_index(respond.from);
  const auto initiator = graph.node_index(respond.to);

  if (channel_open(channels, initiator, responder))
    return TriggerChain{TriggerKind::AlreadyActive, {}, 0};

  const InfluenceGraph influence(graph, banned, channels);
  const auto opener = goal_edge(
      graph, influence, initiator, responder, EdgeKind::Communicate);
  if (!opener)
    return std::nullopt;

  return compel(graph, influence, attacker, initiator, *opener, depth_budget,
                TriggerKind::Activation);
}

} // namespace detail

//==============================================================================
namespace {

std::size_t require_node(const ThreatGraph& g, const NodeId& id, NodeKind kind,
                         const char* role)
{
  const auto i = g.node_index(id);
  if (i == ThreatGraph::npos)
    throw TriggerRequestError(std::string("unknown ") + role + " '" + id.str() + "'");
  if (g.node_at(i).kind != kind)
    throw TriggerRequestError(std::string(role) + " '" + id.str() + "' must be "
                              + (kind == NodeKind::Actor ? "an actor" : "a datasource"));
  return i;
}

std::vector<std::size_t> banned_indices(
    const ThreatGraph& g, const std::set<EdgeId>& banned)
{
  std::vector<std::size_t> result;
  for (const auto& id : banned)
  {
    const auto e = g.edge_index(id);
    if (e != ThreatGraph::npos)
      result.push_back(e);
  }
  return result;
}

detail::IndexChannels channel_indices(const ThreatGraph& g, const ChannelSet& channels)
{
  detail::IndexChannels result;
  for (const auto& [a, b] : channels)
  {
    const auto i = g.node_index(a);
    const auto j = g.node_index(b);
    if (i != ThreatGraph::npos && j != ThreatGraph::npos)
      result.emplace_back(i, j);
  }
  std::sort(result.begin(), result.end());
  return result;
}

} // anonymous namespace

std::optional<TriggerChain> resolve_consumption(
    const ThreatGraph& graph,
    const NodeId& attacker,
    const NodeId& consumer,
    const NodeId& datasource,
    int depth_budget,
    const std::set<EdgeId>& banned,
    const ChannelSet& channels)
{
  const auto a = require_node(graph, attacker, NodeKind::Actor, "attacker");
  const auto c = require_node(graph, consumer, NodeKind::Actor, "consumer");
  const auto d = require_node(graph, datasource, NodeKind::Datasource, "datasource");
  if (depth_budget < 0)
    throw TriggerRequestError("depth budget must be non-negative");

  bool reads = false;
  for (const auto e : graph.out_edges(c))
  {
    const auto& edge = graph.edge_at(e);
    reads = reads || (edge.kind == EdgeKind::Read && edge.to == datasource);
  }
  if (!reads)
    throw TriggerRequestError("consumer '" + consumer.str()
                              + "' has no read edge to '" + datasource.str() + "'");

  const auto ban = banned_indices(graph, banned);
  return detail::consumption_chain(
      graph, a, c, d, depth_budget, ban, channel_indices(graph, channels));
}

std::optional<TriggerChain> resolve_activation(
    const ThreatGraph& graph,
    const NodeId& attacker,
    const EdgeId& respond_edge,
    const ChannelSet& channels,
    int depth_budget,
    const std::set<EdgeId>& banned)
{
  const auto a = require_node(graph, attacker, NodeKind::Actor, "attacker");
  const auto e = graph.edge_index(respond_edge);
  if (e == ThreatGraph::npos)
    throw TriggerRequestError("unknown edge '" + respond_edge.str() + "'");
  if (graph.edge_at(e).kind != EdgeKind::Respond)
    throw TriggerRequestError("edge '" + respond_edge.str() + "' is not a respond edge");
  if (depth_budget < 0)
    throw TriggerRequestError("depth budget must be non-negative");

  const auto ban = banned_indices(graph, banned);
  return detail::activation_chain(
      graph, a, e, depth_budget, ban, channel_indices(graph, channels));
}

bool has_watch(const ThreatGraph& graph, const NodeId& actor, const NodeId& datasource)
{
  return graph.has_watch(actor, datasource);
}

} // namespace agenthellm
