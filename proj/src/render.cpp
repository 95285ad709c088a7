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


#include <agenthellm/render.hpp>

#include <agenthellm/graph_io.hpp>

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace agenthellm {

std::string_view to_string(ActionPhase phase) noexcept
{
  switch (phase)
  {
    case ActionPhase::Activation: return "activation";
    case ActionPhase::Push: return "push";
    case ActionPhase::Consumption: return "consumption";
  }
  return "?";
}

//==============================================================================
std::vector<NumberedAction> number_actions(const AttackPath& path)
{
  std::vector<NumberedAction> actions;
  auto emit = [&](std::size_t step, ActionPhase phase, const EdgeId& edge,
                  EdgeKind kind, const NodeId& from, const NodeId& to,
                  std::int64_t cost, bool watch)
  {
    actions.push_back(NumberedAction{
      static_cast<int>(actions.size()) + 1, step, phase, edge, kind, from, to,
      cost, watch});
  };

  for (std::size_t i = 0; i < path.steps.size(); ++i)
  {
    const auto& step = path.steps[i];
    if (step.activation)
    {
      const auto& chain = step.activation->steps;
      for (std::size_t j = 0; j < chain.size(); ++j)
      {
        // The compelled communicate opens the channel and is not charged.
        const bool opener = j + 1 == chain.size()
            && step.activation->kind == TriggerKind::Activation;
        emit(i, ActionPhase::Activation, chain[j].edge, chain[j].action,
             chain[j].from, chain[j].to, opener ? 0 : 1,
             chain[j].action == EdgeKind::Read);
      }
    }

    emit(i, ActionPhase::Push, step.push.edge, step.push.kind, step.push.from,
         step.push.to, step.cost.push_poison, false);

    if (step.consumption)
    {
      // Reads inside a chain are watch hops; the final read is the
      // consumption itself.
      const auto& chain = step.consumption->steps;
      const bool automatic = step.consumption->kind == TriggerKind::AutomaticWatch;
      for (std::size_t j = 0; j < chain.size(); ++j)
      {
        const bool watch = chain[j].action == EdgeKind::Read
            && (automatic || j + 1 < chain.size());
        emit(i, ActionPhase::Consumption, chain[j].edge, chain[j].action,
             chain[j].from, chain[j].to, 1, watch);
      }
    }
  }
  return actions;
}

//==============================================================================
std::string render_text(const AttackPath& path)
{
  std::ostringstream out;
  CostBreakdown sum;
  for (const auto& s : path.steps)
  {
    sum.push_poison += s.cost.push_poison;
    sum.activation_trigger += s.cost.activation_trigger;
    sum.consumption_trigger += s.cost.consumption_trigger;
    sum.total += s.cost.total;
  }

  for (const auto& a : number_actions(path))
  {
    out << a.number << ". " << a.from << " -" << to_string(a.kind) << "-> "
        << a.to << " (" << to_string(a.phase) << ' ' << a.cost;
    if (a.by_watch)
      out << ", watch";
    out << ")\n";
  }

  out << "total " << sum.total << " = push " << sum.push_poison
      << " + activation " << sum.activation_trigger
      << " + consumption " << sum.consumption_trigger << "\n";
  return out.str();
}

std::string render_text(std::span<const AttackPath> plans)
{
  if (plans.empty())
    return "no attack path found\n";

  std::ostringstream out;
  for (std::size_t i = 0; i < plans.size(); ++i)
  {
    const auto& p = plans[i];
    if (i > 0)
      out << "\n";
    out << "Plan " << p.rank << ": " << p.attacker << " => " << p.target;
    if (p.target_asset)
      out << " [" << *p.target_asset << "]";
    out << ", cost " << p.total_cost << ", " << p.steps.size() << " step(s)\n";
    out << render_text(p);
  }
  return out.str();
}

//==============================================================================
namespace {

std::string quote(const std::string& text)
{
  std::string out = "\"";
  for (const char c : text)
  {
    if (c == '"' || c == '\\')
      out += '\\';
    if (c == '\n')
    {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

} // anonymous namespace

std::string render_dot(const ThreatGraph& graph, const AttackPath* path)
{
  std::map<EdgeId, std::vector<int>> numbers;
  if (path != nullptr)
  {
    for (const auto& a : number_actions(*path))
    {
      const Edge* e = graph.find_edge(a.edge);
      if (e == nullptr || e->from != a.from || e->to != a.to || e->kind != a.kind)
        throw std::invalid_argument(
            "plan action on edge '" + a.edge.str() + "' does not match the graph");
      numbers[a.edge].push_back(a.number);
    }
  }

  std::ostringstream out;
  out << "digraph threat_model {\n";
  out << "  rankdir=LR;\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  out << "  edge [fontname=\"Helvetica\"];\n";

  for (const auto& n : graph.nodes())
  {
    std::string label = n.label.empty() ? n.id.str() : n.label;
    if (path != nullptr && n.id == path->attacker)
      label += "\n(attacker)";
    else if (path != nullptr && n.id == path->target)
      label += "\n(target)";

    out << "  " << quote(n.id.str()) << " [shape="
        << (n.kind == NodeKind::Actor ? "box" : "cylinder")
        << ", label=" << quote(label) << "];\n";
  }

  for (const auto& e : graph.edges())
  {
    const bool watched = e.kind == EdgeKind::Read && graph.has_watch(e.from, e.to);
    std::string label(to_string(e.kind));
    if (watched)
      label += " (watch)";

    const auto it = numbers.find(e.id);
    if (it != numbers.end())
    {
      label += " #";
      for (std::size_t i = 0; i < it->second.size(); ++i)
        label += (i == 0 ? "" : ",") + std::to_string(it->second[i]);
    }

    out << "  " << quote(e.from.str()) << " -> " << quote(e.to.str())
        << " [id=" << quote(e.id.str()) << ", label=" << quote(label);
    if (e.kind == EdgeKind::Respond)
      out << ", style=dashed";
    if (it != numbers.end())
      out << ", color=\"red\", penwidth=2";
    out << "];\n";
  }

  out << "}\n";
  return out.str();
}

//==============================================================================
namespace {

nlohmann::ordered_json cost_json(const CostBreakdown& c)
{
  return {
    {"push_poison", c.push_poison},
    {"activation_trigger", c.activation_trigger},
    {"consumption_trigger", c.consumption_trigger},
    {"total", c.total},
  };
}

nlohmann::ordered_json chain_json(const std::optional<TriggerChain>& chain)
{
  if (!chain)
    return nullptr;

  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : chain->steps)
  {
    steps.push_back({
      {"edge", s.edge.str()},
      {"action", to_string(s.action)},
      {"from", s.from.str()},
      {"to", s.to.str()},
    });
  }
  return {
    {"kind", to_string(chain->kind)},
    {"total_cost", chain->total_cost},
    {"steps", std::move(steps)},
  };
}

nlohmann::ordered_json plan_json(const AttackPath& p)
{
  CostBreakdown sum;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < p.steps.size(); ++i)
  {
    const auto& s = p.steps[i];
    sum.push_poison += s.cost.push_poison;
    sum.activation_trigger += s.cost.activation_trigger;
    sum.consumption_trigger += s.cost.consumption_trigger;
    sum.total += s.cost.total;

    steps.push_back({
      {"index", i + 1},
      {"push", {
        {"edge", s.push.edge.str()},
        {"kind", to_string(s.push.kind)},
        {"from", s.push.from.str()},
        {"to", s.push.to.str()},
      }},
      {"holder", s.holder.str()},
      {"narrative", s.narrative},
      {"cost", cost_json(s.cost)},
      {"activation", chain_json(s.activation)},
      {"consumption", chain_json(s.consumption)},
    });
  }

  nlohmann::ordered_json actions = nlohmann::ordered_json::array();
  for (const auto& a : number_actions(p))
  {
    actions.push_back({
      {"number", a.number},
      {"step", a.step + 1},
      {"phase", to_string(a.phase)},
      {"edge", a.edge.str()},
      {"kind", to_string(a.kind)},
      {"from", a.from.str()},
      {"to", a.to.str()},
      {"cost", a.cost},
      {"watch", a.by_watch},
    });
  }

  return {
    {"rank", p.rank},
    {"total_cost", p.total_cost},
    {"cost", cost_json(sum)},
    {"steps", std::move(steps)},
    {"actions", std::move(actions)},
  };
}

} // anonymous namespace

nlohmann::ordered_json request_to_json(const AnalysisRequest& r)
{
  return {
    {"attacker", r.attacker.str()},
    {"target", r.target.str()},
    {"asset", r.target_asset ? nlohmann::ordered_json(*r.target_asset)
                             : nlohmann::ordered_json(nullptr)},
    {"k", r.k},
    {"max_cost", r.max_cost},
    {"max_steps", r.max_steps},
    {"trigger_depth", r.trigger_depth},
    {"accept_unsolicited", r.accept_unsolicited},
  };
}

nlohmann::ordered_json render_report(
    std::span<const AttackPath> plans,
    const ThreatGraph& graph,
    const AnalysisRequest& request,
    bool truncated)
{
  nlohmann::ordered_json report;
  report["schema"] = kReportSchema;
  report["version"] = kReportVersion;
  report["graph_digest"] = graph_digest(graph);
  report["request"] = request_to_json(request);
  report["truncated"] = truncated;

  auto& list = report["plans"] = nlohmann::ordered_json::array();
  for (const auto& p : plans)
    list.push_back(plan_json(p));
  return report;
}

//==============================================================================
namespace {

class ReportChecker
{
public:
  std::vector<std::string> errors;

  void fail(const std::string& where, const std::string& msg)
  {
    errors.push_back(where + ": " + msg);
  }

  bool expect(bool ok, const std::string& where, const std::string& msg)
  {
    if (!ok)
      fail(where, msg);
    return ok;
  }

  bool has(const nlohmann::json& obj, const char* key, const std::string& where)
  {
    return expect(obj.is_object() && obj.contains(key), where,
                  std::string("missing '") + key + "'");
  }

  bool integer(const nlohmann::json& obj, const char* key, const std::string& where)
  {
    return has(obj, key, where)
        && expect(obj[key].is_number_integer(), where + "/" + key, "expected integer");
  }

  bool string(const nlohmann::json& obj, const char* key, const std::string& where)
  {
    return has(obj, key, where)
        && expect(obj[key].is_string(), where + "/" + key, "expected string");
  }

  std::optional<std::int64_t> cost(const nlohmann::json& c, const std::string& where)
  {
    if (!expect(c.is_object(), where, "expected cost object"))
      return std::nullopt;
    for (const char* key : {"push_poison", "activation_trigger",
                            "consumption_trigger", "total"})
    {
      if (!integer(c, key, where))
        return std::nullopt;
    }
    const auto total = c["total"].get<std::int64_t>();
    expect(total == c["push_poison"].get<std::int64_t>()
                    + c["activation_trigger"].get<std::int64_t>()
                    + c["consumption_trigger"].get<std::int64_t>(),
           where, "total differs from push + activation + consumption");
    return total;
  }

  /// Returns the number of chain steps, or -1 when malformed.
  long chain(const nlohmann::json& c, const std::string& where,
             std::int64_t charged)
  {
    if (!string(c, "kind", where) || !integer(c, "total_cost", where)
        || !has(c, "steps", where))
      return -1;
    if (!expect(c["steps"].is_array(), where + "/steps", "expected array"))
      return -1;

    const auto kind = c["kind"].get<std::string>();
    const auto n = static_cast<std::int64_t>(c["steps"].size());
    const auto total = c["total_cost"].get<std::int64_t>();
    expect(total == charged, where, "chain cost differs from step breakdown");

    if (kind == "already_active")
      expect(n == 0 && total == 0, where, "already_active chain must be empty");
    else if (kind == "automatic_watch")
      expect(n == 1 && total == 1, where, "automatic_watch chain is one read");
    else if (kind == "consumption")
      expect(n >= 1 && total == n, where, "consumption cost must equal its length");
    else if (kind == "activation")
      expect(n >= 1 && total == n - 1, where, "activation cost must be length - 1");
    else
      fail(where + "/kind", "unknown chain kind '" + kind + "'");

    for (std::size_t i = 0; i < c["steps"].size(); ++i)
    {
      const auto at = where + "/steps/" + std::to_string(i);
      for (const char* key : {"edge", "action", "from", "to"})
        string(c["steps"][i], key, at);
    }
    return static_cast<long>(n);
  }

  void plan(const nlohmann::json& p, std::size_t index, const std::string& where)
  {
    if (!expect(p.is_object(), where, "expected object"))
      return;
    if (integer(p, "rank", where))
      expect(p["rank"].get<std::size_t>() == index + 1, where, "rank out of sequence");
    if (!integer(p, "total_cost", where) || !has(p, "steps", where)
        || !has(p, "actions", where) || !has(p, "cost", where))
      return;

    const auto total = p["total_cost"].get<std::int64_t>();
    if (const auto c = cost(p["cost"], where + "/cost"))
      expect(*c == total, where, "plan cost breakdown differs from total_cost");

    const auto& steps = p["steps"];
    if (!expect(steps.is_array() && !steps.empty(), where + "/steps",
                "expected non-empty array"))
      return;

    std::int64_t sum = 0;
    long action_count = 0;
    for (std::size_t i = 0; i < steps.size(); ++i)
    {
      const auto at = where + "/steps/" + std::to_string(i);
      const auto& s = steps[i];
      if (!has(s, "push", at) || !has(s, "cost", at) || !string(s, "holder", at)
          || !has(s, "activation", at) || !has(s, "consumption", at))
        continue;
      for (const char* key : {"edge", "kind", "from", "to"})
        string(s["push"], key, at + "/push");

      const auto c = cost(s["cost"], at + "/cost");
      if (!c)
        continue;
      sum += *c;
      ++action_count;

      const auto kind = s["push"].value("kind", std::string{});
      const bool respond = kind == "respond";
      const bool write = kind == "write";
      expect(respond != s["activation"].is_null(), at,
             "activation chain must be present exactly for respond pushes");
      expect(write != s["consumption"].is_null(), at,
             "consumption chain must be present exactly for write pushes");

      if (!s["activation"].is_null())
        action_count += chain(s["activation"], at + "/activation",
                              s["cost"]["activation_trigger"].get<std::int64_t>());
      else
        expect(s["cost"]["activation_trigger"] == 0, at, "activation cost without chain");

      if (!s["consumption"].is_null())
        action_count += chain(s["consumption"], at + "/consumption",
                              s["cost"]["consumption_trigger"].get<std::int64_t>());
      else
        expect(s["cost"]["consumption_trigger"] == 0, at, "consumption cost without chain");
    }
    expect(sum == total, where, "total_cost differs from the sum of step costs");

    const auto& actions = p["actions"];
    if (!expect(actions.is_array(), where + "/actions", "expected array"))
      return;
    expect(static_cast<long>(actions.size()) == action_count, where + "/actions",
           "action count differs from the plan's atomic actions");

    std::int64_t action_cost = 0;
    for (std::size_t i = 0; i < actions.size(); ++i)
    {
      const auto at = where + "/actions/" + std::to_string(i);
      if (integer(actions[i], "number", at))
        expect(actions[i]["number"].get<std::size_t>() == i + 1, at,
               "action numbers must run 1..A");
      if (integer(actions[i], "cost", at))
        action_cost += actions[i]["cost"].get<std::int64_t>();
      for (const char* key : {"phase", "edge", "kind", "from", "to"})
        string(actions[i], key, at);
    }
    expect(action_cost == total, where, "action costs do not sum to total_cost");
  }
};

} // anonymous namespace

std::vector<std::string> validate_report(const nlohmann::json& report)
{
  ReportChecker check;
  if (!check.expect(report.is_object(), "", "report must be an object"))
    return check.errors;

  static const std::set<std::string> keys = {
    "schema", "version", "graph_digest", "request", "truncated", "plans"};
  for (const auto& [key, _] : report.items())
    check.expect(keys.contains(key), "", "unknown key '" + key + "'");

  if (check.string(report, "schema", ""))
    check.expect(report["schema"] == kReportSchema, "/schema", "unexpected schema id");
  if (check.integer(report, "version", ""))
    check.expect(report["version"] == kReportVersion, "/version", "unsupported version");
  if (check.string(report, "graph_digest", ""))
    check.expect(report["graph_digest"].get<std::string>().rfind("sha256:", 0) == 0,
                 "/graph_digest", "expected sha256 digest");
  if (check.has(report, "truncated", ""))
    check.expect(report["truncated"].is_boolean(), "/truncated", "expected boolean");

  if (check.has(report, "request", ""))
  {
    const auto& r = report["request"];
    check.string(r, "attacker", "/request");
    check.string(r, "target", "/request");
    check.has(r, "asset", "/request");
    for (const char* key : {"k", "max_cost", "max_steps", "trigger_depth"})
      check.integer(r, key, "/request");
  }

  if (check.has(report, "plans", "")
      && check.expect(report["plans"].is_array(), "/plans", "expected array"))
  {
    const auto& plans = report["plans"];
    std::int64_t previous = 0;
    for (std::size_t i = 0; i < plans.size(); ++i)
    {
      const auto at = "/plans/" + std::to_string(i);
      check.plan(plans[i], i, at);
      if (plans[i].is_object() && plans[i].contains("total_cost")
          && plans[i]["total_cost"].is_number_integer())
      {
        const auto c = plans[i]["total_cost"].get<std::int64_t>();
        check.expect(c >= previous, at, "plans are not sorted by cost");
        previous = c;
      }
    }
  }

  return check.errors;
}

} // namespace agenthellm
