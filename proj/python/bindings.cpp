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


#include <agenthellm/asset_catalog.hpp>
#include <agenthellm/graph_io.hpp>
#include <agenthellm/planner.hpp>
#include <agenthellm/render.hpp>
#include <agenthellm/trigger_search.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace agenthellm;

namespace {

py::object graph_error_type;

/// Parses and validates, translating semantic errors into GraphError.
ThreatGraph load(const std::string& text)
{
  try
  {
    return parse_graph(text);
  }
  catch (const GraphSemanticError& e)
  {
    py::list violations;
    for (const auto& v : e.report().violations)
      violations.append(py::make_tuple(std::string(to_string(v.code)), v.id, v.message));
    PyErr_SetObject(graph_error_type.ptr(), py::make_tuple(e.what(), violations).ptr());
    throw py::error_already_set();
  }
}

AnalysisRequest make_request(const std::string& attacker,
                             const std::string& target,
                             std::optional<std::string> asset,
                             int k,
                             std::int64_t max_cost,
                             int max_steps,
                             int trigger_depth,
                             bool accept_unsolicited)
{
  AnalysisRequest r;
  r.attacker = NodeId(attacker);
  r.target = NodeId(target);
  r.target_asset = std::move(asset);
  r.k = k;
  r.max_cost = max_cost;
  r.max_steps = max_steps;
  r.trigger_depth = trigger_depth;
  r.accept_unsolicited = accept_unsolicited;
  return r;
}

#define AGENTHELLM_REQUEST_ARGS \
  py::arg("attacker"), py::arg("target"), py::kw_only(), py::arg("asset") = py::none(), \
  py::arg("k") = 3, py::arg("max_cost") = 25, py::arg("max_steps") = 12, \
  py::arg("trigger_depth") = kDefaultTriggerDepth, py::arg("accept_unsolicited") = false

std::string chain_json(const std::optional<TriggerChain>& chain)
{
  if (!chain)
    return "null";
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(chain->kind));
  j["total_cost"] = chain->total_cost;
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : chain->steps)
  {
    j["steps"].push_back({{"edge", s.edge.str()}, {"action", std::string(to_string(s.action))},
                          {"from", s.from.str()}, {"to", s.to.str()}});
  }
  return j.dump();
}

} // anonymous namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Attack-path planning engine";

  graph_error_type = py::reinterpret_borrow<py::object>(
      PyErr_NewException("agenthellm._core.GraphError", PyExc_ValueError, nullptr));
  m.attr("GraphError") = graph_error_type;

  py::register_exception<GraphFormatError>(m, "GraphFormatError", PyExc_ValueError);
  py::register_exception<RequestError>(m, "RequestError", PyExc_ValueError);
  py::register_exception<TriggerRequestError>(m, "TriggerRequestError", PyExc_ValueError);
  py::register_exception<OracleLimitError>(m, "OracleLimitError", PyExc_ValueError);

  m.def("validate", [](const std::string& text)
  {
    return report_to_json(validate_graph(read_graph_document(text))).dump();
  }, py::arg("graph"), "Validation report for a graph document, as JSON text.");

  m.def("canonical", [](const std::string& text) { return serialize_graph(load(text)); },
        py::arg("graph"), "Canonical serialization of a valid graph document.");

  m.def("analyze",
    [](const std::string& text, const std::string& attacker, const std::string& target,
       std::optional<std::string> asset, int k, std::int64_t max_cost, int max_steps,
       int trigger_depth, bool unsolicited)
    {
      const auto graph = load(text);
      const auto request = make_request(attacker, target, std::move(asset), k, max_cost,
                                        max_steps, trigger_depth, unsolicited);
      PlanResult result;
      {
        py::gil_scoped_release release;
        result = plan_attacks_with_stats(graph, request);
      }
      return render_report(result.plans, graph, request, result.stats.truncated).dump();
    },
    py::arg("graph"), AGENTHELLM_REQUEST_ARGS, "Ranked plans as a JSON report.");

  m.def("oracle",
    [](const std::string& text, const std::string& attacker, const std::string& target,
       std::optional<std::string> asset, int k, std::int64_t max_cost, int max_steps,
       int trigger_depth, bool unsolicited)
    {
      const auto graph = load(text);
      const auto request = make_request(attacker, target, std::move(asset), k, max_cost,
                                        max_steps, trigger_depth, unsolicited);
      auto plans = oracle_enumerate(graph, request);
      for (std::size_t i = 0; i < plans.size(); ++i)
        plans[i].rank = static_cast<int>(i) + 1;
      return render_report(plans, graph, request).dump();
    },
    py::arg("graph"), AGENTHELLM_REQUEST_ARGS,
    "Every plan within the bounds, found by exhaustive enumeration.");

  m.def("render_text",
    [](const std::string& text, const std::string& attacker, const std::string& target,
       std::optional<std::string> asset, int k, std::int64_t max_cost, int max_steps,
       int trigger_depth, bool unsolicited)
    {
      const auto graph = load(text);
      return agenthellm::render_text(plan_attacks(
          graph, make_request(attacker, target, std::move(asset), k, max_cost, max_steps,
                              trigger_depth, unsolicited)));
    },
    py::arg("graph"), AGENTHELLM_REQUEST_ARGS);

  m.def("render_dot",
    [](const std::string& text, std::optional<std::string> attacker,
       std::optional<std::string> target, int plan)
    {
      const auto graph = load(text);
      if (!attacker || !target)
        return agenthellm::render_dot(graph);
      auto request = make_request(*attacker, *target, std::nullopt, std::max(plan, 1), 25, 12,
                                  kDefaultTriggerDepth, false);
      const auto plans = plan_attacks(graph, request);
      const auto index = static_cast<std::size_t>(plan - 1);
      return agenthellm::render_dot(graph, index < plans.size() ? &plans[index] : nullptr);
    },
    py::arg("graph"), py::arg("attacker") = py::none(), py::arg("target") = py::none(),
    py::arg("plan") = 1);

  m.def("resolve_consumption",
    [](const std::string& text, const std::string& attacker, const std::string& consumer,
       const std::string& datasource, int depth)
    {
      const auto graph = load(text);
      return chain_json(agenthellm::resolve_consumption(
          graph, NodeId(attacker), NodeId(consumer), NodeId(datasource), depth));
    },
    py::arg("graph"), py::arg("attacker"), py::arg("consumer"), py::arg("datasource"),
    py::arg("depth") = kDefaultTriggerDepth);

  m.def("resolve_activation",
    [](const std::string& text, const std::string& attacker, const std::string& respond_edge,
       const std::vector<std::pair<std::string, std::string>>& channels, int depth)
    {
      const auto graph = load(text);
      ChannelSet open;
      for (const auto& [a, b] : channels)
        open.emplace(NodeId(a), NodeId(b));
      return chain_json(agenthellm::resolve_activation(
          graph, NodeId(attacker), EdgeId(respond_edge), open, depth));
    },
    py::arg("graph"), py::arg("attacker"), py::arg("respond_edge"),
    py::arg("channels") = std::vector<std::pair<std::string, std::string>>{},
    py::arg("depth") = kDefaultTriggerDepth);

  m.def("catalog", [] { return serialize_catalog(catalog_from_environment()); },
        "Asset catalog as JSON text.");
}
