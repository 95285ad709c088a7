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


#include <agenthellm/planner.hpp>

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

namespace agenthellm {

namespace {

using detail::IndexChannels;

detail::IndexChannels with_channel(
    IndexChannels channels, std::size_t initiator, std::size_t responder)
{
  const auto pair = std::make_pair(initiator, responder);
  const auto it = std::lower_bound(channels.begin(), channels.end(), pair);
  if (it == channels.end() || *it != pair)
    channels.insert(it, pair);
  return channels;
}

struct IndexState
{
  std::size_t frontier = 0;
  IndexChannels channels;
  std::int64_t g = 0;
  int steps = 0;
};

struct IndexSuccessor
{
  AttackStep step;
  IndexState state;
  std::size_t push_edge = 0;
  bool goal = false;
};

//==============================================================================
/// Generates push-poison successors of index states.
class Expander
{
public:
  Expander(const ThreatGraph& graph, const AnalysisRequest& request)
  : _g(graph),
    _request(request),
    _attacker(graph.node_index(request.attacker)),
    _target(graph.node_index(request.target))
  {
  }

  std::vector<IndexSuccessor> expand(const IndexState& s) const
  {
    std::vector<IndexSuccessor> out;
    if (s.steps >= _request.max_steps)
      return out;

    for (const auto e : _g.out_edges(s.frontier))
    {
      const auto& edge = _g.edge_at(e);
      const auto to = _g.node_index(edge.to);
      const std::size_t banned[] = {e};

      switch (edge.kind)
      {
        case EdgeKind::Communicate:
        {
          add(out, s, e, to, std::nullopt, std::nullopt,
              with_channel(s.channels, s.frontier, to));
          break;
        }
        case EdgeKind::Respond:
        {
          auto activation = detail::activation_chain(
              _g, _attacker, e, _request.trigger_depth, banned, s.channels);
          if (!activation)
            break;
          add(out, s, e, to, std::move(activation), std::nullopt,
              with_channel(s.channels, to, s.frontier));
          break;
        }
        case EdgeKind::Write:
        {
          for (const auto reader : readers(to))
          {
            auto consumption = detail::consumption_chain(
                _g, _attacker, reader, to, _request.trigger_depth, banned,
                s.channels);
            if (!consumption)
              continue;
            add(out, s, e, reader, std::nullopt, std::move(consumption),
                s.channels);
          }
          break;
        }
        case EdgeKind::Read:
          break;
      }
    }
    return out;
  }

  std::size_t attacker() const { return _attacker; }

private:
  /// Distinct actors with a read edge on `datasource`, ascending by id.
  std::vector<std::size_t> readers(std::size_t datasource) const
  {
    std::vector<std::size_t> result;
    for (const auto e : _g.in_edges(datasource))
    {
      if (_g.edge_at(e).kind == EdgeKind::Read)
        result.push_back(_g.node_index(_g.edge_at(e).from));
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  void add(std::vector<IndexSuccessor>& out,
           const IndexState& s,
           std::size_t e,
           std::size_t holder,
           std::optional<TriggerChain> activation,
           std::optional<TriggerChain> consumption,
           IndexChannels channels) const
  {
    const auto& edge = _g.edge_at(e);
    const auto cost = CostBreakdown::of(
        edge.base_cost,
        activation ? activation->total_cost : 0,
        consumption ? consumption->total_cost : 0);

    if (cost.total > _request.max_cost - s.g)
      return;

    IndexSuccessor succ;
    succ.step.push = PushAction{edge.id, edge.kind, edge.from, edge.to};
    succ.step.activation = std::move(activation);
    succ.step.consumption = std::move(consumption);
    succ.step.cost = cost;
    succ.step.holder = _g.node_at(holder).id;
    succ.step.narrative = narrate(succ.step);
    succ.state = IndexState{holder, std::move(channels), s.g + cost.total, s.steps + 1};
    succ.push_edge = e;
    succ.goal = is_goal_step(succ.step, _request);
    out.push_back(std::move(succ));
  }

  const ThreatGraph& _g;
  const AnalysisRequest& _request;
  std::size_t _attacker;
  std::size_t _target;
};

//==============================================================================
std::vector<std::int64_t> heuristic_table(const ThreatGraph& g, std::size_t target)
{
  std::vector<std::int64_t> h(g.nodes().size(), kUnreachable);
  using Entry = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  h[target] = 0;
  queue.emplace(0, target);

  auto relax = [&](std::size_t n, std::int64_t d)
  {
    if (d < h[n])
    {
      h[n] = d;
      queue.emplace(d, n);
    }
  };

  while (!queue.empty())
  {
    const auto [d, n] = queue.top();
    queue.pop();
    if (d != h[n])
      continue;

    for (const auto e : g.in_edges(n))
    {
      const auto& edge = g.edge_at(e);
      if (edge.kind != EdgeKind::Read)
        relax(g.node_index(edge.from), d + edge.base_cost);
    }
    // A datasource hands poison to any of its readers at no extra cost.
    for (const auto e : g.out_edges(n))
    {
      const auto& edge = g.edge_at(e);
      if (edge.kind == EdgeKind::Read)
        relax(g.node_index(edge.to), d);
    }
  }
  return h;
}

std::size_t require_actor(const ThreatGraph& g, const NodeId& id, const char* role)
{
  const auto i = g.node_index(id);
  if (i == ThreatGraph::npos)
    throw RequestError(std::string("unknown ") + role + " '" + id.str() + "'");
  if (g.node_at(i).kind != NodeKind::Actor)
    throw RequestError(std::string(role) + " '" + id.str() + "' is not an actor");
  return i;
}

IndexChannels initial_channels(const ThreatGraph& g)
{
  const auto decoded = decode_initial_channels(g);
  if (!decoded)
    throw RequestError("graph metadata initial_channels is malformed");

  IndexChannels channels;
  for (const auto& [a, b] : *decoded)
  {
    const auto i = g.node_index(a);
    const auto j = g.node_index(b);
    if (i != ThreatGraph::npos && j != ThreatGraph::npos)
      channels = with_channel(std::move(channels), i, j);
  }
  return channels;
}

ChannelSet to_channel_set(const ThreatGraph& g, const IndexChannels& channels)
{
  ChannelSet result;
  for (const auto& [a, b] : channels)
    result.emplace(g.node_at(a).id, g.node_at(b).id);
  return result;
}

IndexChannels to_index_channels(const ThreatGraph& g, const ChannelSet& channels)
{
  IndexChannels result;
  for (const auto& [a, b] : channels)
  {
    const auto i = require_actor(g, a, "channel initiator");
    const auto j = require_actor(g, b, "channel responder");
    result.emplace_back(i, j);
  }
  std::sort(result.begin(), result.end());
  return result;
}

AttackPath make_path(const AnalysisRequest& request, std::vector<AttackStep> steps)
{
  AttackPath path;
  path.attacker = request.attacker;
  path.target = request.target;
  path.target_asset = request.target_asset;
  for (const auto& s : steps)
    path.total_cost += s.cost.total;
  path.steps = std::move(steps);
  return path;
}

//==============================================================================
/// Best-first search node. Nodes form a tree through `parent`.
struct SearchNode
{
  static constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

  std::size_t parent = kRoot;
  AttackStep step;
  IndexState state;
  std::int64_t f = 0;
  bool goal = false;

  /// Per-step (push edge, holder) indices: the ranking tie-break.
  std::vector<std::pair<std::size_t, std::size_t>> sequence;
};

struct Arrival
{
  std::int64_t g;
  int steps;
};

using StateKey = std::pair<std::size_t, IndexChannels>;

} // anonymous namespace

//==============================================================================
void check_request(const ThreatGraph& graph, const AnalysisRequest& request)
{
  const auto a = require_actor(graph, request.attacker, "attacker");
  const auto t = require_actor(graph, request.target, "target");
  if (a == t)
    throw RequestError("attacker and target must differ");
  if (!graph.node_at(a).attacker_capable)
    throw RequestError("node '" + request.attacker.str()
                       + "' is not marked attacker_capable");

  const auto& assets = graph.node_at(t).assets;
  if (assets.empty())
    throw RequestError("target '" + request.target.str() + "' carries no assets");
  if (request.target_asset && !assets.contains(*request.target_asset))
    throw RequestError("target '" + request.target.str()
                       + "' does not carry asset '" + *request.target_asset + "'");

  if (request.k < 1)
    throw RequestError("k must be at least 1");
  if (request.max_cost < 1 || request.max_steps < 1)
    throw RequestError("cost and step bounds must be positive");
  if (request.trigger_depth < 0)
    throw RequestError("trigger depth must be non-negative");
}

SearchState initial_state(const ThreatGraph& graph, const AnalysisRequest& request)
{
  require_actor(graph, request.attacker, "attacker");
  return SearchState{
    request.attacker, to_channel_set(graph, initial_channels(graph)), {}, 0};
}

std::map<NodeId, std::int64_t> precompute_heuristic(
    const ThreatGraph& graph, const NodeId& target)
{
  const auto t = graph.node_index(target);
  if (t == ThreatGraph::npos)
    throw RequestError("unknown target '" + target.str() + "'");

  const auto table = heuristic_table(graph, t);
  std::map<NodeId, std::int64_t> result;
  for (std::size_t i = 0; i < table.size(); ++i)
    result.emplace(graph.node_at(i).id, table[i]);
  return result;
}

bool is_goal_step(const AttackStep& step, const AnalysisRequest& request)
{
  if (step.holder != request.target)
    return false;
  return step.push.kind != EdgeKind::Communicate || request.accept_unsolicited;
}

std::vector<std::pair<AttackStep, SearchState>> expand_state(
    const ThreatGraph& graph,
    const SearchState& state,
    const AnalysisRequest& request)
{
  const Expander expander(graph, request);
  const IndexState s{
    require_actor(graph, state.frontier, "frontier"),
    to_index_channels(graph, state.channels),
    state.g_cost,
    static_cast<int>(state.steps.size())};

  std::vector<std::pair<AttackStep, SearchState>> result;
  for (auto& succ : expander.expand(s))
  {
    SearchState next;
    next.frontier = graph.node_at(succ.state.frontier).id;
    next.channels = to_channel_set(graph, succ.state.channels);
    next.steps = state.steps;
    next.steps.push_back(succ.step);
    next.g_cost = succ.state.g;
    result.emplace_back(std::move(succ.step), std::move(next));
  }
  return result;
}

//==============================================================================
PlanResult plan_attacks_with_stats(
    const ThreatGraph& graph,
    const AnalysisRequest& request,
    const PlannerOptions& options)
{
  check_request(graph, request);

  PlanResult result;
  auto& stats = result.stats;
  const auto k = static_cast<std::size_t>(request.k);
  stats.arrivals_cap = options.arrivals_cap.value_or(
      k * static_cast<std::size_t>(request.max_steps));

  const Expander expander(graph, request);
  const auto h = heuristic_table(graph, graph.node_index(request.target));

  std::vector<SearchNode> nodes;
  auto worse = [&nodes](std::size_t a, std::size_t b)
  {
    const auto& x = nodes[a];
    const auto& y = nodes[b];
    return std::tie(x.f, x.state.steps, x.sequence)
         > std::tie(y.f, y.state.steps, y.sequence);
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)>
      open(worse);

  SearchNode root;
  root.state = IndexState{expander.attacker(), initial_channels(graph), 0, 0};
  root.f = h[root.state.frontier];
  if (root.f == kUnreachable)
    return result;
  nodes.push_back(std::move(root));
  open.push(0);

  std::map<StateKey, std::vector<Arrival>> arrivals;
  std::vector<std::size_t> visits(graph.nodes().size(), 0);

  while (!open.empty())
  {
    const auto current = open.top();
    open.pop();

    if (nodes[current].goal)
    {
      std::vector<AttackStep> steps;
      for (auto n = current; nodes[n].parent != SearchNode::kRoot; n = nodes[n].parent)
        steps.push_back(nodes[n].step);
      std::reverse(steps.begin(), steps.end());

      auto path = make_path(request, std::move(steps));
      path.rank = static_cast<int>(result.plans.size()) + 1;
      result.plans.push_back(std::move(path));
      if (result.plans.size() == k)
        break;
      continue;
    }

    const auto& state = nodes[current].state;
    if (state.steps >= request.max_steps)
      continue;

    // An arrival is dominated by an earlier one that was no more expensive
    // and no longer; k dominators mean none of its completions can rank.
    auto& seen = arrivals[StateKey{state.frontier, state.channels}];
    const auto dominators = std::count_if(seen.begin(), seen.end(),
      [&](const Arrival& a) { return a.g <= state.g && a.steps <= state.steps; });
    if (static_cast<std::size_t>(dominators) >= k || seen.size() >= stats.arrivals_cap)
    {
      ++stats.pruned;
      continue;
    }

    if (stats.expanded >= options.max_expansions)
    {
      stats.truncated = true;
      break;
    }

    seen.push_back({state.g, state.steps});
    stats.max_arrivals_per_key = std::max(stats.max_arrivals_per_key, seen.size());
    stats.max_node_visits = std::max(stats.max_node_visits, ++visits[state.frontier]);
    ++stats.expanded;

    for (auto& succ : expander.expand(state))
    {
      const auto remaining = h[succ.state.frontier];
      if (remaining == kUnreachable || remaining > request.max_cost - succ.state.g)
        continue;

      SearchNode child;
      child.parent = current;
      child.f = succ.state.g + remaining;
      child.goal = succ.goal;
      child.sequence = nodes[current].sequence;
      child.sequence.emplace_back(succ.push_edge, succ.state.frontier);
      child.step = std::move(succ.step);
      child.state = std::move(succ.state);

      nodes.push_back(std::move(child));
      open.push(nodes.size() - 1);
      ++stats.generated;
    }
  }

  return result;
}

std::vector<AttackPath> plan_attacks(
    const ThreatGraph& graph, const AnalysisRequest& request)
{
  return plan_attacks_with_stats(graph, request).plans;
}

//==============================================================================
namespace {

void enumerate(const ThreatGraph& graph,
               const AnalysisRequest& request,
               const SearchState& state,
               std::vector<AttackPath>& found)
{
  for (auto& [step, next] : expand_state(graph, state, request))
  {
    if (is_goal_step(step, request))
      found.push_back(make_path(request, std::move(next.steps)));
    else
      enumerate(graph, request, next, found);
  }
}

} // anonymous namespace

std::vector<AttackPath> oracle_enumerate(
    const ThreatGraph& graph, const AnalysisRequest& request)
{
  if (graph.nodes().size() > kOracleMaxNodes || graph.edges().size() > kOracleMaxEdges)
    throw OracleLimitError("graph too large for exhaustive enumeration");

  auto relaxed = request;
  relaxed.max_cost = std::max<std::int64_t>(request.max_cost, 1);
  relaxed.max_steps = std::max(request.max_steps, 1);
  relaxed.k = std::max(request.k, 1);
  check_request(graph, relaxed);

  std::vector<AttackPath> found;
  if (request.max_cost <= 0 || request.max_steps <= 0)
    return found;

  enumerate(graph, request, initial_state(graph, request), found);
  std::sort(found.begin(), found.end(), plan_less);
  for (std::size_t i = 0; i < found.size(); ++i)
    found[i].rank = static_cast<int>(i) + 1;
  return found;
}

} // namespace agenthellm
