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


// Acceptance suite: one PASS/FAIL line per criterion.

#include "../support/brute_force.hpp"
#include "../support/random_graph.hpp"

#include <agenthellm/asset_catalog.hpp>
#include <agenthellm/graph_io.hpp>
#include <agenthellm/planner.hpp>
#include <agenthellm/render.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace agenthellm;
using namespace agenthellm::testing;

namespace {

const std::filesystem::path kFixtures = AGENTHELLM_FIXTURE_DIR;
const std::filesystem::path kGoldens = AGENTHELLM_GOLDEN_DIR;
const std::string kCli = AGENTHELLM_CLI_PATH;

constexpr int kRandomGraphs = 600;
constexpr std::uint64_t kSeed = 20240611;

/// Collects failure messages for one criterion.
class Check
{
public:
  void expect(bool ok, const std::string& what)
  {
    if (!ok && _failures.size() < 10)
      _failures.push_back(what);
    _ok = _ok && ok;
  }

  bool ok() const { return _ok; }
  const std::vector<std::string>& failures() const { return _failures; }

private:
  bool _ok = true;
  std::vector<std::string> _failures;
};

std::string slurp(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnalysisRequest request_for(const std::string& attacker, const std::string& target)
{
  AnalysisRequest r;
  r.attacker = NodeId(attacker);
  r.target = NodeId(target);
  return r;
}

std::string describe(const RandomCase& c, int index)
{
  return "graph #" + std::to_string(index) + ": " + serialize_graph(c.graph);
}

//==============================================================================
// Shared random-graph run: the planner, the library oracle and the test-side
// brute force on the same inputs.

struct RandomRun
{
  RandomCase input;
  PlanResult astar;
  std::vector<AttackPath> oracle;
  std::vector<BrutePlan> brute;
};

struct RandomSuite
{
  std::vector<RandomRun> runs;
  double seconds = 0;
};

const RandomSuite& random_suite()
{
  static const RandomSuite suite = []
  {
    RandomSuite s;
    std::mt19937_64 rng(kSeed);
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < kRandomGraphs; ++i)
    {
      RandomRun run{random_case(rng), {}, {}, {}};
      run.astar = plan_attacks_with_stats(run.input.graph, run.input.request);
      run.oracle = oracle_enumerate(run.input.graph, run.input.request);
      s.runs.push_back(std::move(run));
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // The independent enumerator is not part of the timed planner+oracle run.
    for (auto& run : s.runs)
      run.brute = brute_plans(run.input.graph, run.input.request);
    return s;
  }();
  return suite;
}

//==============================================================================
Check oracle_optimality()
{
  Check check;
  const auto& suite = random_suite();
  int with_plans = 0;
  std::size_t compared = 0, longest = 0, responds = 0, activations = 0, consumptions = 0, ties = 0;

  for (std::size_t i = 0; i < suite.runs.size(); ++i)
  {
    const auto& run = suite.runs[i];
    const auto where = describe(run.input, static_cast<int>(i));

    std::vector<BrutePlan> oracle;
    for (const auto& p : run.oracle)
      oracle.push_back(project(p));
    check.expect(oracle == run.brute, "oracle_enumerate disagrees with brute force on " + where);

    const auto& plans = run.astar.plans;
    check.expect(!run.astar.stats.truncated, "search truncated on " + where);
    check.expect(plans.empty() == oracle.empty(), "reachability differs on " + where);
    if (!plans.empty() && !oracle.empty())
      check.expect(plans.front().total_cost == oracle.front().cost,
                   "best cost differs on " + where);

    const auto k = std::min(static_cast<std::size_t>(run.input.request.k), oracle.size());
    check.expect(plans.size() == k, "plan count differs on " + where);
    for (std::size_t j = 0; j < std::min(k, plans.size()); ++j)
    {
      check.expect(project(plans[j]) == oracle[j],
                   "plan " + std::to_string(j + 1) + " differs on " + where);
      check.expect(plans[j].rank == static_cast<int>(j) + 1, "bad rank on " + where);
    }
    with_plans += plans.empty() ? 0 : 1;
    compared += plans.size();
    for (const auto& p : plans)
    {
      longest = std::max(longest, p.steps.size());
      for (const auto& st : p.steps)
      {
        responds += st.push.kind == EdgeKind::Respond ? 1 : 0;
        activations += st.activation && !st.activation->steps.empty() ? 1 : 0;
        consumptions += st.consumption && st.consumption->kind == TriggerKind::Consumption ? 1 : 0;
      }
    }
    for (std::size_t j = 1; j < plans.size(); ++j)
      ties += plans[j].total_cost == plans[j - 1].total_cost ? 1 : 0;
  }

  check.expect(with_plans >= kRandomGraphs / 4,
               "too few graphs with plans: " + std::to_string(with_plans));
  check.expect(suite.seconds < 60.0,
               "planner and oracle took " + std::to_string(suite.seconds) + " s");
  std::cout << "  (" << suite.runs.size() << " graphs, " << with_plans << " with plans, "
            << suite.seconds << " s)\n"
            << "  (" << compared << " plans, longest " << longest << " steps, " << responds
            << " respond steps, " << activations << " activation chains, " << consumptions
            << " consumption chains, " << ties << " equal-cost neighbours)\n";
  return check;
}

Check cost_equation()
{
  Check check;
  std::size_t steps = 0;
  for (const auto& run : random_suite().runs)
  {
    for (const auto& plan : run.astar.plans)
    {
      std::int64_t sum = 0;
      for (const auto& s : plan.steps)
      {
        const auto* edge = run.input.graph.find_edge(s.push.edge);
        const auto activation = s.activation ? s.activation->total_cost : 0;
        const auto consumption = s.consumption ? s.consumption->total_cost : 0;
        check.expect(edge && s.cost.push_poison == edge->base_cost, "push cost mismatch");
        check.expect(s.cost.activation_trigger == activation, "activation cost mismatch");
        check.expect(s.cost.consumption_trigger == consumption, "consumption cost mismatch");
        check.expect(s.cost.total == s.cost.push_poison + s.cost.activation_trigger
                                         + s.cost.consumption_trigger,
                     "step total != push + activation + consumption");
        sum += s.cost.total;
        ++steps;
      }
      check.expect(plan.total_cost == sum, "plan total != sum of steps");
    }
  }
  check.expect(steps > 0, "no steps checked");
  return check;
}

//==============================================================================
Check fig4a_fixture()
{
  Check check;
  const auto with_watch = load_graph_file(kFixtures / "fig4a.json");
  const auto without_watch = load_graph_file(kFixtures / "fig4a_nowatch.json");
  const auto request = request_for("attacker", "car_agent");

  const auto a = plan_attacks(with_watch, request);
  check.expect(!a.empty(), "no plan with the watch");
  if (!a.empty())
  {
    const auto& best = a.front();
    check.expect(best.total_cost == 3, "with watch: cost != 3");
    check.expect(best.steps.size() == 2, "with watch: expected two steps");
    if (best.steps.size() == 2)
    {
      check.expect(best.steps[0].push.kind == EdgeKind::Communicate, "step 1 is not communicate");
      check.expect(best.steps[1].push.kind == EdgeKind::Write, "step 2 is not write");
      check.expect(best.steps[1].consumption
                       && best.steps[1].consumption->kind == TriggerKind::AutomaticWatch,
                   "step 2 is not auto-consumed");
    }
    std::vector<int> numbers;
    for (const auto& n : number_actions(best))
      numbers.push_back(n.number);
    check.expect(numbers == std::vector<int>{1, 2, 3}, "action numbering is not 1..3");
  }

  const auto b = plan_attacks(without_watch, request);
  check.expect(!b.empty(), "no plan without the watch");
  if (!b.empty())
  {
    const auto& best = b.front();
    check.expect(best.total_cost == 4, "without watch: cost != 4");
    const auto& last = best.steps.back();
    check.expect(last.consumption && last.consumption->kind == TriggerKind::Consumption
                     && last.consumption->steps.size() == 2
                     && last.consumption->total_cost == 2,
                 "without watch: no explicit consumption chain of length 2");
  }

  for (const auto& [name, graph, plans] :
       {std::tuple{"fig4a", &with_watch, &a}, std::tuple{"fig4a_nowatch", &without_watch, &b}})
  {
    const std::string stem = name;
    check.expect(render_report(*plans, *graph, request).dump(2) + "\n"
                     == slurp(kGoldens / (stem + ".json")),
                 stem + ": JSON report differs from golden");
    check.expect(render_text(*plans) == slurp(kGoldens / (stem + ".txt")),
                 stem + ": text differs from golden");
    check.expect(render_dot(*graph, plans->empty() ? nullptr : &plans->front())
                     == slurp(kGoldens / (stem + ".dot")),
                 stem + ": DOT differs from golden");
  }
  return check;
}

//==============================================================================
/// Replays a plan and checks every respond push happens inside an open
/// channel: initial, opened by an earlier communicate, or opened by the
/// step's own activation chain.
bool channels_sound(const ThreatGraph& graph, const AttackPath& plan)
{
  ChannelSet open;
  if (const auto initial = decode_initial_channels(graph))
    open.insert(initial->begin(), initial->end());

  for (const auto& s : plan.steps)
  {
    if (s.push.kind == EdgeKind::Communicate)
      open.insert({s.push.from, s.push.to});
    if (s.push.kind != EdgeKind::Respond)
      continue;

    const Channel needed{s.push.to, s.push.from};
    if (!open.contains(needed))
    {
      if (!s.activation || s.activation->steps.empty())
        return false;
      const auto& opener = s.activation->steps.back();
      if (opener.action != EdgeKind::Communicate || opener.from != needed.first
          || opener.to != needed.second)
        return false;
      open.insert(needed);
    }
  }
  return true;
}

Check fig6_fixture()
{
  Check check;
  const auto request = [] { auto r = request_for("attacker", "car_agent"); r.k = 10; return r; }();

  const auto a = load_graph_file(kFixtures / "fig6a.json");
  const auto fig6a_plans = plan_attacks(a, request);
  const AttackStep* respond = nullptr;
  for (const auto& plan : fig6a_plans)
  {
    check.expect(channels_sound(a, plan), "fig6a plan violates channel state");
    for (const auto& s : plan.steps)
    {
      if (s.push.kind == EdgeKind::Respond && !respond)
        respond = &s;
    }
  }

  check.expect(respond != nullptr, "fig6a: no plan with a respond step");
  if (respond)
  {
    const auto& chain = respond->activation;
    check.expect(chain && chain->kind == TriggerKind::Activation && chain->total_cost == 2,
                 "fig6a: respond activation chain cost != 2");
    if (chain && chain->steps.size() == 3)
    {
      check.expect(chain->steps[0].action == EdgeKind::Write, "fig6a: chain does not start with write");
      check.expect(chain->steps[1].action == EdgeKind::Read
                       && has_watch(a, chain->steps[1].from, chain->steps[1].to),
                   "fig6a: chain lacks the watch read");
      check.expect(chain->steps[2].action == EdgeKind::Communicate,
                   "fig6a: chain does not compel a communicate");
    }
    else
    {
      check.expect(false, "fig6a: activation chain is not write, watch-read, communicate");
    }
  }

  const auto b = load_graph_file(kFixtures / "fig6b.json");
  check.expect(b.watches().empty(), "fig6b fixture has a watch");
  const auto fig6b_plans = plan_attacks(b, request);
  check.expect(!fig6b_plans.empty(), "fig6b: no plan");
  if (!fig6b_plans.empty())
  {
    const auto& s = fig6b_plans.front().steps.back();
    check.expect(s.consumption && s.consumption->kind == TriggerKind::Consumption
                     && s.consumption->total_cost == 2 && s.consumption->steps.size() == 2,
                 "fig6b: consumption chain cost != 2");
  }

  // Without the opener communicate no plan may use the respond edge.
  std::vector<Edge> edges;
  for (const auto& e : a.edges())
  {
    if (!(e.kind == EdgeKind::Communicate && e.from == NodeId("car_agent")
          && e.to == NodeId("attacker")))
      edges.push_back(e);
  }
  const ThreatGraph cut({a.nodes().begin(), a.nodes().end()}, edges,
                        {a.watches().begin(), a.watches().end()}, a.metadata());
  auto wide = request;
  wide.k = 1000;
  for (const auto& plan : plan_attacks(cut, wide))
  {
    for (const auto& s : plan.steps)
      check.expect(s.push.kind != EdgeKind::Respond,
                   "respond plan survives without its channel opener");
  }
  for (const auto& plan : oracle_enumerate(cut, wide))
  {
    for (const auto& s : plan.steps)
      check.expect(s.push.kind != EdgeKind::Respond, "oracle finds a respond plan without opener");
  }

  for (const auto& run : random_suite().runs)
  {
    for (const auto& plan : run.astar.plans)
      check.expect(channels_sound(run.input.graph, plan), "random plan violates channel state");
  }
  return check;
}

//==============================================================================
Check persistence_cycle()
{
  Check check;
  const auto graph = load_graph_file(kFixtures / "persistence.json");
  auto request = request_for("attacker", "victim");
  request.k = 5;
  request.max_cost = 60;
  request.max_steps = 30;

  for (const std::optional<std::size_t> cap : {std::optional<std::size_t>{}, std::optional<std::size_t>{3}})
  {
    PlannerOptions options;
    options.arrivals_cap = cap;
    const auto result = plan_attacks_with_stats(graph, request, options);
    const auto label = cap ? std::string("cap 3") : std::string("default cap");

    check.expect(!result.stats.truncated, label + ": search did not terminate within bounds");
    check.expect(result.stats.max_arrivals_per_key <= result.stats.arrivals_cap,
                 label + ": per-key revisits exceed the cap");
    check.expect(!result.plans.empty(), label + ": no plan");
    if (result.plans.empty())
      continue;

    // Attacker -> victim, then the victim writes memory and reads it back.
    const auto& best = result.plans.front();
    bool round_trip = best.steps.size() == 2
        && best.steps[0].push.kind == EdgeKind::Communicate
        && best.steps[0].holder == NodeId("victim")
        && best.steps[1].push.kind == EdgeKind::Write
        && best.steps[1].push.from == NodeId("victim")
        && best.steps[1].push.to == NodeId("memory")
        && best.steps[1].holder == NodeId("victim");
    check.expect(round_trip, label + ": best plan is not the memory round trip");
    check.expect(best.total_cost == 4, label + ": round trip cost != 4");
    std::cout << "  (" << label << ": expanded " << result.stats.expanded
              << ", max revisits per key " << result.stats.max_arrivals_per_key << " <= "
              << result.stats.arrivals_cap << ")\n";
  }

  const auto unbounded_cap = [&]
  {
    PlannerOptions o;
    o.arrivals_cap = 1'000'000;
    return plan_attacks_with_stats(graph, request, o);
  }();
  check.expect(unbounded_cap.stats.max_arrivals_per_key
                   <= static_cast<std::size_t>(request.k * request.max_steps),
               "dominance pruning exceeds k * max_steps arrivals per key");
  return check;
}

//==============================================================================
Check trigger_minimality()
{
  Check check;
  std::mt19937_64 rng(kSeed + 1);
  std::size_t compared = 0;
  std::size_t found = 0;

  for (const auto& run : random_suite().runs)
  {
    const auto& g = run.input.graph;
    const auto& attacker = run.input.request.attacker;

    for (int depth = 0; depth <= kDefaultTriggerDepth; ++depth)
    {
      ChannelSet channels;
      std::set<EdgeId> banned;
      for (const auto& e : g.edges())
      {
        if (e.kind == EdgeKind::Communicate && std::bernoulli_distribution(0.3)(rng))
          channels.insert({e.from, e.to});
        if (std::bernoulli_distribution(0.1)(rng))
          banned.insert(e.id);
      }

      for (const auto& e : g.edges())
      {
        if (e.kind == EdgeKind::Read)
        {
          const auto got = resolve_consumption(g, attacker, e.from, e.to, depth, banned, channels);
          const auto want = brute_consumption(g, attacker, e.from, e.to, depth, banned, channels);
          check.expect(got == want, "consumption chain differs from exhaustive minimum on "
                                        + serialize_graph(g));
          ++compared;
          found += got ? 1 : 0;
        }
        if (e.kind == EdgeKind::Respond)
        {
          const auto got = resolve_activation(g, attacker, e.id, channels, depth, banned);
          const auto want = brute_activation(g, attacker, e.id, depth, banned, channels);
          check.expect(got == want, "activation chain differs from exhaustive minimum on "
                                        + serialize_graph(g));
          ++compared;
          found += got ? 1 : 0;
        }
      }
    }
  }

  check.expect(found > 100, "too few chains found: " + std::to_string(found));
  std::cout << "  (" << compared << " trigger queries, " << found << " chains)\n";
  return check;
}

//==============================================================================
std::optional<std::string> run_cli(const std::string& args)
{
  const auto out = std::filesystem::temp_directory_path()
      / ("agenthellm_acceptance_" + std::to_string(std::hash<std::string>{}(args)) + ".out");
  const auto command = "\"" + kCli + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(command.c_str());
  if (status == -1)
    return std::nullopt;
  auto text = slurp(out);
  std::filesystem::remove(out);
  return std::to_string(status) + "\n" + text;
}

Check determinism()
{
  Check check;
  const std::vector<std::pair<std::string, std::string>> fixtures = {
    {"fig4a.json", "--attacker attacker --target car_agent"},
    {"fig4a_nowatch.json", "--attacker attacker --target car_agent"},
    {"fig6a.json", "--attacker attacker --target car_agent -k 5"},
    {"fig6b.json", "--attacker attacker --target car_agent"},
    {"persistence.json", "--attacker attacker --target victim -k 4"},
    {"one_edge.json", "--attacker attacker --target victim --accept-unsolicited"},
  };

  std::size_t runs = 0;
  for (const auto& [file, args] : fixtures)
  {
    for (const std::string format : {"text", "json", "dot"})
    {
      const auto line = "analyze --graph \"" + (kFixtures / file).string() + "\" " + args
          + " --format " + format;
      const auto first = run_cli(line);
      check.expect(first.has_value() && first->rfind("0\n", 0) == 0,
                   file + " " + format + ": CLI failed");
      for (int repeat = 0; repeat < 3; ++repeat)
        check.expect(run_cli(line) == first, file + " " + format + ": output differs between runs");
      runs += 4;
    }
  }
  std::cout << "  (" << runs << " CLI runs)\n";
  return check;
}

//==============================================================================
Check catalog_fidelity()
{
  Check check;
  const auto table = nlohmann::json::parse(slurp(kFixtures / "asset_table.json"));
  const auto& catalog = builtin_catalog();

  check.expect(catalog.size() == 7 && table.size() == 7, "catalog does not have 7 rows");
  for (std::size_t i = 0; i < std::min(catalog.size(), table.size()); ++i)
  {
    const auto& row = table[i];
    const auto& c = catalog[i];
    const auto where = "row " + std::to_string(i + 1);
    check.expect(c.name == row["name"].get<std::string>(), where + ": name");
    check.expect(c.udhr_articles == row["udhr"].get<std::vector<int>>(), where + ": UDHR articles");
    check.expect(c.severity_rank == static_cast<int>(i) + 1, where + ": severity order");
    check.expect(c.example_scenario == row["scenario"].get<std::string>(), where + ": scenario");
    check.expect(c.example_attack == row["attack"].get<std::string>(), where + ": attack");
  }
  return check;
}

} // anonymous namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
    {"oracle-optimality", oracle_optimality},
    {"cost-equation", cost_equation},
    {"fig4a-memory-poisoning", fig4a_fixture},
    {"fig6-trigger-mechanisms", fig6_fixture},
    {"persistence-cycle", persistence_cycle},
    {"trigger-bfs-minimality", trigger_minimality},
    {"cli-determinism", determinism},
    {"catalog-fidelity", catalog_fidelity},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria)
  {
    Check result;
    try
    {
      result = run();
    }
    catch (const std::exception& e)
    {
      result.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (result.ok() ? "PASS " : "FAIL ") << name << "\n";
    for (const auto& f : result.failures())
      std::cout << "    " << f << "\n";
    failed += result.ok() ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
