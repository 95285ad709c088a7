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


#ifndef AGENTHELLM__GRAPH_HPP
#define AGENTHELLM__GRAPH_HPP

#include <agenthellm/ids.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace agenthellm {

enum class NodeKind : std::uint8_t { Actor, Datasource };

enum class EdgeKind : std::uint8_t { Read, Write, Communicate, Respond };

std::string_view to_string(NodeKind kind) noexcept;
std::string_view to_string(EdgeKind kind) noexcept;
std::optional<NodeKind> node_kind_from_string(std::string_view text) noexcept;
std::optional<EdgeKind> edge_kind_from_string(std::string_view text) noexcept;

/// Small bitmask over EdgeKind used for outgoing-edge filters.
class EdgeKindSet
{
public:
  constexpr EdgeKindSet() = default;
  constexpr EdgeKindSet(std::initializer_list<EdgeKind> kinds)
  {
    for (const auto k : kinds)
      _bits |= bit(k);
  }

  static constexpr EdgeKindSet all()
  {
    return {EdgeKind::Read, EdgeKind::Write, EdgeKind::Communicate,
            EdgeKind::Respond};
  }

  constexpr bool contains(EdgeKind k) const { return (_bits & bit(k)) != 0; }
  constexpr bool operator==(const EdgeKindSet&) const = default;

private:
  static constexpr std::uint8_t bit(EdgeKind k)
  {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k));
  }

  std::uint8_t _bits = 0;
};

struct Node
{
  NodeId id;
  NodeKind kind = NodeKind::Actor;
  std::string label;
  std::set<std::string> assets;
  bool attacker_capable = false;

  bool operator==(const Node&) const = default;
};

struct Edge
{
  EdgeId id;
  NodeId from;
  NodeId to;
  EdgeKind kind = EdgeKind::Communicate;
  std::int64_t base_cost = 1;

  bool operator==(const Edge&) const = default;
};

/// Automatic monitoring of a datasource by an actor (e.g. mailbox polling).
struct Watch
{
  NodeId actor;
  NodeId datasource;

  auto operator<=>(const Watch&) const = default;
  bool operator==(const Watch&) const = default;
};

using Metadata = std::map<std::string, std::string>;

/// Metadata key holding pre-existing conversations as a JSON-encoded list of
/// [initiator, responder] pairs.
inline constexpr std::string_view kInitialChannelsKey = "initial_channels";

//==============================================================================
/// The modeled ecosystem. Immutable after construction.
///
/// A ThreatGraph may hold an invalid candidate (duplicate ids, dangling
/// endpoints); use validate_graph() before planning. Nodes and edges are kept
/// sorted by id, and the dense indices exposed here follow that order, so
/// comparing indices is equivalent to comparing ids.
class ThreatGraph
{
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ThreatGraph() = default;
  ThreatGraph(std::vector<Node> nodes,
              std::vector<Edge> edges,
              std::vector<Watch> watches = {},
              Metadata metadata = {});

  std::span<const Node> nodes() const noexcept { return _nodes; }
  std::span<const Edge> edges() const noexcept { return _edges; }
  std::span<const Watch> watches() const noexcept { return _watches; }
  const Metadata& metadata() const noexcept { return _metadata; }

  const Node* find_node(const NodeId& id) const;
  const Edge* find_edge(const EdgeId& id) const;

  std::size_t node_index(const NodeId& id) const;
  std::size_t edge_index(const EdgeId& id) const;

  const Node& node_at(std::size_t index) const { return _nodes.at(index); }
  const Edge& edge_at(std::size_t index) const { return _edges.at(index); }

  /// Edge indices leaving / entering a node, ascending by edge id. Only edges
  /// whose endpoints resolve are indexed.
  std::span<const std::size_t> out_edges(std::size_t node) const;
  std::span<const std::size_t> in_edges(std::size_t node) const;

  /// Edges leaving `node` whose kind is in `filter`, ordered by EdgeId.
  /// Throws std::out_of_range for an unknown node id.
  std::vector<Edge> outgoing_edges(
      const NodeId& node,
      std::optional<EdgeKindSet> filter = std::nullopt) const;

  /// Throws std::out_of_range for unknown ids.
  bool has_watch(const NodeId& actor, const NodeId& datasource) const;
  bool has_watch(std::size_t actor, std::size_t datasource) const;

  bool operator==(const ThreatGraph& other) const;

private:
  std::vector<Node> _nodes;
  std::vector<Edge> _edges;
  std::vector<Watch> _watches;
  Metadata _metadata;

  std::unordered_map<NodeId, std::size_t> _node_index;
  std::unordered_map<EdgeId, std::size_t> _edge_index;
  std::vector<std::vector<std::size_t>> _out;
  std::vector<std::vector<std::size_t>> _in;
  std::set<std::pair<std::size_t, std::size_t>> _watch_index;
};

} // namespace agenthellm

#endif // AGENTHELLM__GRAPH_HPP
