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


#include <agenthellm/validation.hpp>

#include <json.hpp>

#include <set>

namespace agenthellm {

std::string_view to_string(ViolationCode code) noexcept
{
  switch (code)
  {
    case ViolationCode::EmptyId: return "EMPTY_ID";
    case ViolationCode::DuplicateId: return "DUPLICATE_ID";
    case ViolationCode::UnknownEndpoint: return "UNKNOWN_ENDPOINT";
    case ViolationCode::EdgeEndpointKind: return "EDGE_ENDPOINT_KIND";
    case ViolationCode::SelfLoop: return "SELF_LOOP";
    case ViolationCode::NonPositiveCost: return "NON_POSITIVE_COST";
    case ViolationCode::AssetOnDatasource: return "ASSET_ON_DATASOURCE";
    case ViolationCode::UnknownAsset: return "UNKNOWN_ASSET";
    case ViolationCode::WatchUnknownNode: return "WATCH_UNKNOWN_NODE";
    case ViolationCode::WatchEndpointKind: return "WATCH_ENDPOINT_KIND";
    case ViolationCode::WatchWithoutRead: return "WATCH_WITHOUT_READ";
    case ViolationCode::DuplicateWatch: return "DUPLICATE_WATCH";
    case ViolationCode::BadInitialChannels: return "BAD_INITIAL_CHANNELS";
  }
  return "UNKNOWN";
}

bool ValidationReport::contains(ViolationCode code) const noexcept
{
  for (const auto& v : violations)
  {
    if (v.code == code)
      return true;
  }
  return false;
}

namespace {

struct Expected
{
  NodeKind from;
  NodeKind to;
};

Expected expected_endpoints(EdgeKind kind)
{
  switch (kind)
  {
    case EdgeKind::Read:
    case EdgeKind::Write:
      return {NodeKind::Actor, NodeKind::Datasource};
    case EdgeKind::Communicate:
    case EdgeKind::Respond:
      return {NodeKind::Actor, NodeKind::Actor};
  }
  return {NodeKind::Actor, NodeKind::Actor};
}

std::string watch_label(const Watch& w)
{
  return w.actor.str() + "->" + w.datasource.str();
}

} // anonymous namespace

//==============================================================================
ValidationReport validate_graph(
    const ThreatGraph& graph,
    const AssetCatalog& catalog)
{
  ValidationReport report;
  auto add = [&](ViolationCode code, std::string id, std::string message)
  {
    report.violations.push_back({code, std::move(id), std::move(message)});
  };

  std::set<NodeId> node_ids;
  for (const auto& n : graph.nodes())
  {
    if (n.id.empty())
      add(ViolationCode::EmptyId, "", "node with empty id");
    else if (!node_ids.insert(n.id).second)
      add(ViolationCode::DuplicateId, n.id.str(),
          "node id '" + n.id.str() + "' is used more than once");

    if (n.kind == NodeKind::Datasource && !n.assets.empty())
      add(ViolationCode::AssetOnDatasource, n.id.str(),
          "assets may only be attached to actors");

    for (const auto& a : n.assets)
    {
      if (catalog.lookup(a) == nullptr)
        add(ViolationCode::UnknownAsset, n.id.str(),
            "asset category '" + a + "' is not in the catalog");
    }
  }

  std::set<EdgeId> edge_ids;
  for (const auto& e : graph.edges())
  {
    const std::string id = e.id.str();
    const std::string kind(to_string(e.kind));
    if (e.id.empty())
      add(ViolationCode::EmptyId, "", "edge with empty id");
    else if (!edge_ids.insert(e.id).second)
      add(ViolationCode::DuplicateId, id,
          "edge id '" + id + "' is used more than once");

    if (e.base_cost <= 0)
      add(ViolationCode::NonPositiveCost, id,
          "edge cost must be a positive integer");

    const Node* from = graph.find_node(e.from);
    const Node* to = graph.find_node(e.to);
    if (from == nullptr)
      add(ViolationCode::UnknownEndpoint, id,
          "edge source '" + e.from.str() + "' does not exist");
    if (to == nullptr)
      add(ViolationCode::UnknownEndpoint, id,
          "edge target '" + e.to.str() + "' does not exist");
    if (from == nullptr || to == nullptr)
      continue;

    const auto want = expected_endpoints(e.kind);
    if (from->kind != want.from || to->kind != want.to)
    {
      add(ViolationCode::EdgeEndpointKind, id,
          kind + " edge must run " + std::string(to_string(want.from))
          + " -> " + std::string(to_string(want.to)) + ", found "
          + std::string(to_string(from->kind)) + " -> "
          + std::string(to_string(to->kind)));
    }

    if ((e.kind == EdgeKind::Communicate || e.kind == EdgeKind::Respond)
        && e.from == e.to)
    {
      add(ViolationCode::SelfLoop, id,
          kind + " edge may not start and end at the same actor");
    }
  }

  std::set<Watch> seen_watches;
  for (const auto& w : graph.watches())
  {
    const auto label = watch_label(w);
    if (!seen_watches.insert(w).second)
    {
      add(ViolationCode::DuplicateWatch, label, "watch declared more than once");
      continue;
    }

    const Node* actor = graph.find_node(w.actor);
    const Node* ds = graph.find_node(w.datasource);
    if (actor == nullptr || ds == nullptr)
    {
      add(ViolationCode::WatchUnknownNode, label,
          "watch references a node that does not exist");
      continue;
    }

    if (actor->kind != NodeKind::Actor || ds->kind != NodeKind::Datasource)
    {
      add(ViolationCode::WatchEndpointKind, label,
          "a watch must pair an actor with a datasource");
      continue;
    }

    bool has_read = false;
    for (const auto& e : graph.outgoing_edges(w.actor, EdgeKindSet{EdgeKind::Read}))
      has_read = has_read || e.to == w.datasource;
    if (!has_read)
      add(ViolationCode::WatchWithoutRead, label,
          "watching actor has no read edge to the datasource");
  }

  const auto channels = decode_initial_channels(graph);
  if (!channels)
  {
    add(ViolationCode::BadInitialChannels, std::string(kInitialChannelsKey),
        "initial_channels must be a JSON list of [initiator, responder] pairs");
  }
  else
  {
    for (const auto& [initiator, responder] : *channels)
    {
      const Node* a = graph.find_node(initiator);
      const Node* b = graph.find_node(responder);
      if (a == nullptr || b == nullptr || a->kind != NodeKind::Actor
          || b->kind != NodeKind::Actor || initiator == responder)
      {
        add(ViolationCode::BadInitialChannels,
            initiator.str() + "->" + responder.str(),
            "initial channel must join two distinct existing actors");
      }
    }
  }

  return report;
}

//==============================================================================
std::optional<std::vector<Channel>> decode_initial_channels(
    const ThreatGraph& graph)
{
  const auto it = graph.metadata().find(std::string(kInitialChannelsKey));
  if (it == graph.metadata().end())
    return std::vector<Channel>{};

  const auto doc = nlohmann::json::parse(it->second, nullptr, false);
  if (doc.is_discarded() || !doc.is_array())
    return std::nullopt;

  std::vector<Channel> result;
  for (const auto& pair : doc)
  {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string()
        || !pair[1].is_string())
      return std::nullopt;
    result.emplace_back(NodeId(pair[0].get<std::string>()),
                        NodeId(pair[1].get<std::string>()));
  }
  return result;
}

} // namespace agenthellm
