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


#include <agenthellm/graph_io.hpp>

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace agenthellm {

GraphFormatError::GraphFormatError(
    bool syntax, std::string location, const std::string& msg)
: std::runtime_error(msg), _syntax(syntax), _location(std::move(location))
{
}

namespace {

std::string join_messages(const ValidationReport& report)
{
  std::string text = "graph has " + std::to_string(report.violations.size())
      + " violation(s)";
  for (const auto& v : report.violations)
    text += "; " + std::string(to_string(v.code)) + " " + v.id;
  return text;
}

[[noreturn]] void schema_error(const std::string& where, const std::string& msg)
{
  throw GraphFormatError(false, where, (where.empty() ? std::string("document root") : where) + ": " + msg);
}

void check_keys(const nlohmann::json& obj,
                const std::set<std::string>& allowed,
                const std::string& where)
{
  if (!obj.is_object())
    schema_error(where, "expected an object");
  for (const auto& [key, _] : obj.items())
  {
    if (!allowed.contains(key))
      schema_error(where, "unknown key '" + key + "'");
  }
}

const nlohmann::json& require(const nlohmann::json& obj,
                              const std::string& key,
                              const std::string& where)
{
  const auto it = obj.find(key);
  if (it == obj.end())
    schema_error(where, "missing required key '" + key + "'");
  return *it;
}

std::string get_string(const nlohmann::json& value, const std::string& where)
{
  if (!value.is_string())
    schema_error(where, "expected a string");
  return value.get<std::string>();
}

const nlohmann::json& get_array(const nlohmann::json& obj,
                                const std::string& key,
                                const std::string& where,
                                bool required = false)
{
  static const nlohmann::json empty = nlohmann::json::array();
  const auto it = obj.find(key);
  if (it == obj.end())
  {
    if (required)
      schema_error(where, "missing required key '" + key + "'");
    return empty;
  }
  if (!it->is_array())
    schema_error(where + "/" + key, "expected an array");
  return *it;
}

Node decode_node(const nlohmann::json& j, const std::string& where)
{
  check_keys(j, {"id", "kind", "label", "assets", "attacker_capable"}, where);
  Node n;
  n.id = NodeId(get_string(require(j, "id", where), where + "/id"));

  const auto kind_text = get_string(require(j, "kind", where), where + "/kind");
  const auto kind = node_kind_from_string(kind_text);
  if (!kind)
    schema_error(where + "/kind", "unknown node kind '" + kind_text + "'");
  n.kind = *kind;

  if (j.contains("label"))
    n.label = get_string(j["label"], where + "/label");

  const auto& assets = get_array(j, "assets", where);
  for (std::size_t i = 0; i < assets.size(); ++i)
  {
    const auto at = where + "/assets/" + std::to_string(i);
    if (!n.assets.insert(get_string(assets[i], at)).second)
      schema_error(at, "duplicate asset id");
  }

  if (j.contains("attacker_capable"))
  {
    if (!j["attacker_capable"].is_boolean())
      schema_error(where + "/attacker_capable", "expected a boolean");
    n.attacker_capable = j["attacker_capable"].get<bool>();
  }
  return n;
}

Edge decode_edge(const nlohmann::json& j, const std::string& where)
{
  check_keys(j, {"id", "from", "to", "kind", "cost"}, where);
  Edge e;
  e.id = EdgeId(get_string(require(j, "id", where), where + "/id"));
  e.from = NodeId(get_string(require(j, "from", where), where + "/from"));
  e.to = NodeId(get_string(require(j, "to", where), where + "/to"));

  const auto kind_text = get_string(require(j, "kind", where), where + "/kind");
  const auto kind = edge_kind_from_string(kind_text);
  if (!kind)
    schema_error(where + "/kind", "unknown edge kind '" + kind_text + "'");
  e.kind = *kind;

  if (j.contains("cost"))
  {
    const auto& c = j["cost"];
    if (!c.is_number_integer())
      schema_error(where + "/cost", "expected an integer");
    e.base_cost = c.get<std::int64_t>();
  }
  return e;
}

Watch decode_watch(const nlohmann::json& j, const std::string& where)
{
  check_keys(j, {"actor", "datasource"}, where);
  return Watch{
    NodeId(get_string(require(j, "actor", where), where + "/actor")),
    NodeId(get_string(require(j, "datasource", where), where + "/datasource"))};
}

} // anonymous namespace

GraphSemanticError::GraphSemanticError(ValidationReport report)
: std::runtime_error(join_messages(report)), _report(std::move(report))
{
}

//==============================================================================
ThreatGraph graph_from_json(const nlohmann::json& doc)
{
  check_keys(doc, {"version", "metadata", "nodes", "edges", "watches"}, "");

  const auto& version = require(doc, "version", "");
  if (!version.is_number_integer() || version.get<int>() != kGraphFormatVersion)
    schema_error("/version", "unsupported format version");

  Metadata metadata;
  if (doc.contains("metadata"))
  {
    const auto& m = doc["metadata"];
    if (!m.is_object())
      schema_error("/metadata", "expected an object");
    for (const auto& [key, value] : m.items())
      metadata[key] = get_string(value, "/metadata/" + key);
  }

  std::vector<Node> nodes;
  const auto& jn = get_array(doc, "nodes", "", true);
  for (std::size_t i = 0; i < jn.size(); ++i)
    nodes.push_back(decode_node(jn[i], "/nodes/" + std::to_string(i)));

  std::vector<Edge> edges;
  const auto& je = get_array(doc, "edges", "", true);
  for (std::size_t i = 0; i < je.size(); ++i)
    edges.push_back(decode_edge(je[i], "/edges/" + std::to_string(i)));

  std::vector<Watch> watches;
  const auto& jw = get_array(doc, "watches", "");
  for (std::size_t i = 0; i < jw.size(); ++i)
    watches.push_back(decode_watch(jw[i], "/watches/" + std::to_string(i)));

  return ThreatGraph(
      std::move(nodes), std::move(edges), std::move(watches),
      std::move(metadata));
}

ThreatGraph read_graph_document(std::string_view text)
{
  nlohmann::json doc;
  try
  {
    doc = nlohmann::json::parse(text);
  }
  catch (const nlohmann::json::parse_error& e)
  {
    throw GraphFormatError(true, std::to_string(e.byte), e.what());
  }
  return graph_from_json(doc);
}

ThreatGraph parse_graph(std::string_view text, const AssetCatalog& catalog)
{
  auto graph = read_graph_document(text);
  auto report = validate_graph(graph, catalog);
  if (!report.ok())
    throw GraphSemanticError(std::move(report));
  return graph;
}

ThreatGraph load_graph_file(
    const std::filesystem::path& path,
    const AssetCatalog& catalog)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read graph file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str(), catalog);
}

//==============================================================================
nlohmann::ordered_json graph_to_json(const ThreatGraph& graph)
{
  nlohmann::ordered_json doc;
  doc["version"] = kGraphFormatVersion;

  auto& metadata = doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : graph.metadata())
    metadata[key] = value;

  auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : graph.nodes())
  {
    nodes.push_back({
      {"id", n.id.str()},
      {"kind", to_string(n.kind)},
      {"label", n.label},
      {"assets", n.assets},
      {"attacker_capable", n.attacker_capable},
    });
  }

  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges())
  {
    edges.push_back({
      {"id", e.id.str()},
      {"from", e.from.str()},
      {"to", e.to.str()},
      {"kind", to_string(e.kind)},
      {"cost", e.base_cost},
    });
  }

  auto& watches = doc["watches"] = nlohmann::ordered_json::array();
  for (const auto& w : graph.watches())
    watches.push_back({{"actor", w.actor.str()}, {"datasource", w.datasource.str()}});

  return doc;
}

std::string serialize_graph(const ThreatGraph& graph)
{
  return graph_to_json(graph).dump(2) + "\n";
}

std::string graph_digest(const ThreatGraph& graph)
{
  const auto text = serialize_graph(graph);
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr);

  std::string hex = "sha256:";
  char buf[3];
  for (unsigned int i = 0; i < len; ++i)
  {
    std::snprintf(buf, sizeof(buf), "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

nlohmann::ordered_json report_to_json(const ValidationReport& report)
{
  nlohmann::ordered_json out;
  out["valid"] = report.ok();
  auto& list = out["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : report.violations)
  {
    list.push_back({
      {"code", to_string(v.code)},
      {"id", v.id},
      {"message", v.message},
    });
  }
  return out;
}

} // namespace agenthellm
