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


#include <agenthellm/graph.hpp>

#include <algorithm>
#include <stdexcept>

namespace agenthellm {

std::string_view to_string(NodeKind kind) noexcept
{
  switch (kind)
  {
    case NodeKind::Actor: return "actor";
    case NodeKind::Datasource: return "datasource";
  }
  return "?";
}

std::string_view to_string(EdgeKind kind) noexcept
{
  switch (kind)
  {
    case EdgeKind::Read: return "read";
    case EdgeKind::Write: return "write";
    case EdgeKind::Communicate: return "communicate";
    case EdgeKind::Respond: return "respond";
  }
  return "?";
}

std::optional<NodeKind> node_kind_from_string(std::string_view text) noexcept
{
  if (text == "actor")
    return NodeKind::Actor;
  if (text == "datasource")
    return NodeKind::Datasource;
  return std::nullopt;
}

std::optional<EdgeKind> edge_kind_from_string(std::string_view text) noexcept
{
  if (text == "read")
    return EdgeKind::Read;
  if (text == "write")
    return EdgeKind::Write;
  if (text == "communicate")
    return EdgeKind::Communicate;
  if (text == "respond")
    return EdgeKind::Respond;
  return std::nullopt;
}

//==============================================================================
ThreatGraph::ThreatGraph(
    std::vector<Node> nodes,
    std::vector<Edge> edges,
    std::vector<Watch> watches,
    Metadata metadata)
: _nodes(std::move(nodes)),
  _edges(std::move(edges)),
  _watches(std::move(watches)),
  _metadata(std::move(metadata))
{
  // Stable sorts keep duplicate ids in input order so validation can name
  // the second occurrence.
  std::stable_sort(_nodes.begin(), _nodes.end(),
    [](const Node& a, const Node& b) { return a.id < b.id; });
  std::stable_sort(_edges.begin(), _edges.end(),
    [](const Edge& a, const Edge& b) { return a.id < b.id; });
  std::stable_sort(_watches.begin(), _watches.end());

  for (std::size_t i = 0; i < _nodes.size(); ++i)
    _node_index.try_emplace(_nodes[i].id, i);
  for (std::size_t i = 0; i < _edges.size(); ++i)
    _edge_index.try_emplace(_edges[i].id, i);

  _out.resize(_nodes.size());
  _in.resize(_nodes.size());
  for (std::size_t i = 0; i < _edges.size(); ++i)
  {
    const auto from = node_index(_edges[i].from);
    const auto to = node_index(_edges[i].to);
    if (from == npos || to == npos)
      continue;
    _out[from].push_back(i);
    _in[to].push_back(i);
  }

  for (const auto& w : _watches)
  {
    const auto a = node_index(w.actor);
    const auto d = node_index(w.datasource);
    if (a != npos && d != npos)
      _watch_index.emplace(a, d);
  }
}

//==============================================================================
const Node* ThreatGraph::find_node(const NodeId& id) const
{
  const auto i = node_index(id);
  return i == npos ? nullptr : &_nodes[i];
}

const Edge* ThreatGraph::find_edge(const EdgeId& id) const
{
  const auto i = edge_index(id);
  return i == npos ? nullptr : &_edges[i];
}

std::size_t ThreatGraph::node_index(const NodeId& id) const
{
  const auto it = _node_index.find(id);
  return it == _node_index.end() ? npos : it->second;
}

std::size_t ThreatGraph::edge_index(const EdgeId& id) const
{
  const auto it = _edge_index.find(id);
  return it == _edge_index.end() ? npos : it->second;
}

std::span<const std::size_t> ThreatGraph::out_edges(std::size_t node) const
{
  return _out.at(node);
}

std::span<const std::size_t> ThreatGraph::in_edges(std::size_t node) const
{
  return _in.at(node);
}

//==============================================================================
std::vector<Edge> ThreatGraph::outgoing_edges(
    const NodeId& node,
    std::optional<EdgeKindSet> filter) const
{
  const auto i = node_index(node);
  if (i == npos)
    throw std::out_of_range("unknown node id '" + node.str() + "'");

  const auto kinds = filter.value_or(EdgeKindSet::all());
  std::vector<Edge> result;
  for (const auto e : _out[i])
  {
    if (kinds.contains(_edges[e].kind))
      result.push_back(_edges[e]);
  }
  return result;
}

bool ThreatGraph::has_watch(const NodeId& actor, const NodeId& datasource) const
{
  const auto a = node_index(actor);
  if (a == npos)
    throw std::out_of_range("unknown node id '" + actor.str() + "'");
  const auto d = node_index(datasource);
  if (d == npos)
    throw std::out_of_range("unknown node id '" + datasource.str() + "'");
  return has_watch(a, d);
}

bool ThreatGraph::has_watch(std::size_t actor, std::size_t datasource) const
{
  return _watch_index.contains({actor, datasource});
}

bool ThreatGraph::operator==(const ThreatGraph& other) const
{
  return _nodes == other._nodes && _edges == other._edges
      && _watches == other._watches && _metadata == other._metadata;
}

} // namespace agenthellm
