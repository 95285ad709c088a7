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


#include <agenthellm/cli.hpp>

#include <agenthellm/asset_catalog.hpp>
#include <agenthellm/graph_io.hpp>
#include <agenthellm/planner.hpp>
#include <agenthellm/render.hpp>
#include <agenthellm/service.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

namespace agenthellm::cli {

namespace {

struct Options
{
  std::string graph_path;
  std::string attacker;
  std::string target;
  std::string asset;
  int k = 3;
  std::int64_t max_cost = 25;
  int max_steps = 12;
  int trigger_depth = kDefaultTriggerDepth;
  bool accept_unsolicited = false;
  std::string format = "text";
  std::string output;
  int highlight = 1;

  std::string host = "127.0.0.1";
  int port = 8787;
  std::size_t max_body_bytes = 4u << 20;
  std::size_t max_expansions = 500'000;
};

std::optional<std::string> read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool emit(const std::string& data, const Options& o, std::ostream& out, std::ostream& err)
{
  if (o.output.empty() || o.output == "-")
  {
    out << data;
    return true;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file)
  {
    err << "error: cannot write '" << o.output << "'\n";
    return false;
  }
  file << data;
  return true;
}

void print_report(const ValidationReport& report, std::ostream& err)
{
  for (const auto& v : report.violations)
    err << to_string(v.code) << " " << v.id << ": " << v.message << "\n";
}

/// Loads and validates the graph, reporting failures. Returns an exit code
/// on failure.
std::variant<ThreatGraph, int> load(
    const Options& o, const AssetCatalog& catalog, std::ostream& err)
{
  const auto text = read_file(o.graph_path);
  if (!text)
  {
    err << "error: cannot read graph file '" << o.graph_path << "'\n";
    return kUsage;
  }

  try
  {
    return parse_graph(*text, catalog);
  }
  catch (const GraphFormatError& e)
  {
    if (e.is_syntax_error())
      err << "error: syntax error at byte " << e.location() << ": " << e.what() << "\n";
    else
      err << "error: format error at " << e.what() << "\n";
  }
  catch (const GraphSemanticError& e)
  {
    err << "error: graph is invalid\n";
    print_report(e.report(), err);
  }
  return kInvalid;
}

int do_validate(const Options& o, const AssetCatalog& catalog,
                std::ostream& out, std::ostream& err)
{
  auto loaded = load(o, catalog, err);
  if (std::holds_alternative<int>(loaded))
    return std::get<int>(loaded);
  return emit("valid\n", o, out, err) ? kOk : kUsage;
}

int do_analyze(const Options& o, const AssetCatalog& catalog,
               std::ostream& out, std::ostream& err)
{
  auto loaded = load(o, catalog, err);
  if (std::holds_alternative<int>(loaded))
    return std::get<int>(loaded);
  const auto& graph = std::get<ThreatGraph>(loaded);

  AnalysisRequest request;
  request.attacker = NodeId(o.attacker);
  request.target = NodeId(o.target);
  if (!o.asset.empty())
    request.target_asset = o.asset;
  request.k = o.k;
  request.max_cost = o.max_cost;
  request.max_steps = o.max_steps;
  request.trigger_depth = o.trigger_depth;
  request.accept_unsolicited = o.accept_unsolicited;

  PlanResult result;
  try
  {
    PlannerOptions options;
    options.max_expansions = o.max_expansions;
    result = plan_attacks_with_stats(graph, request, options);
  }
  catch (const RequestError& e)
  {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (result.stats.truncated)
    err << "warning: search stopped at the expansion limit; results may be incomplete\n";

  std::string data;
  if (o.format == "json")
  {
    data = render_report(result.plans, graph, request, result.stats.truncated).dump(2) + "\n";
  }
  else if (o.format == "dot")
  {
    const auto index = static_cast<std::size_t>(o.highlight - 1);
    const AttackPath* path = index < result.plans.size() ? &result.plans[index] : nullptr;
    data = render_dot(graph, path);
  }
  else
  {
    data = render_text(result.plans);
  }

  if (!emit(data, o, out, err))
    return kUsage;
  if (result.plans.empty())
  {
    err << "no attack path found\n";
    return kNoPath;
  }
  return kOk;
}

int do_catalog(const Options& o, const AssetCatalog& catalog,
               std::ostream& out, std::ostream& err)
{
  if (o.format == "json")
    return emit(serialize_catalog(catalog), o, out, err) ? kOk : kUsage;

  std::ostringstream text;
  for (const auto& c : catalog.categories())
  {
    text << c.severity_rank << ". " << c.name << " [" << c.id << "] UDHR ";
    for (std::size_t i = 0; i < c.udhr_articles.size(); ++i)
      text << (i == 0 ? "" : ", ") << c.udhr_articles[i];
    text << "\n";
  }
  return emit(text.str(), o, out, err) ? kOk : kUsage;
}

int do_serve(const Options& o, const AssetCatalog& catalog, std::ostream& err)
{
  ServiceConfig config;
  config.host = o.host;
  config.port = o.port;
  config.max_body_bytes = o.max_body_bytes;
  config.max_expansions = o.max_expansions;
  config.catalog = catalog;

  HttpServer server{AnalysisService(config)};
  const int port = server.bind(config.host, config.port);
  if (port < 0)
  {
    err << "error: cannot listen on " << config.host << ":" << config.port << "\n";
    return kUsage;
  }
  err << "listening on http://" << config.host << ":" << port << "\n";
  return server.run() ? kOk : kUsage;
}

} // anonymous namespace

//==============================================================================
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Attack-path planning for agentic LLM ecosystems", "agenthellm"};
  app.require_subcommand(1);

  Options o;
  const std::vector<std::string> formats = {"text", "json", "dot"};

  auto* validate = app.add_subcommand("validate", "Check a graph file");
  validate->add_option("--graph", o.graph_path, "Graph file")->required();

  auto* analyze = app.add_subcommand("analyze", "Find ranked attack plans");
  analyze->add_option("--graph", o.graph_path, "Graph file")->required();
  analyze->add_option("--attacker", o.attacker, "Attacker node id")->required();
  analyze->add_option("--target", o.target, "Target actor id")->required();
  analyze->add_option("--asset", o.asset, "Target asset category id");
  analyze->add_option("-k,--k", o.k, "Number of ranked plans")->capture_default_str();
  analyze->add_option("--max-cost", o.max_cost, "Plan cost bound")->capture_default_str();
  analyze->add_option("--max-steps", o.max_steps, "Plan length bound")->capture_default_str();
  analyze->add_option("--trigger-depth", o.trigger_depth, "Trigger sub-search depth")
      ->capture_default_str();
  analyze->add_flag("--accept-unsolicited", o.accept_unsolicited,
                    "Count a direct communicate into the target as a compromise");
  analyze->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember(formats))->capture_default_str();
  analyze->add_option("--plan", o.highlight, "Plan rank highlighted in DOT output")
      ->check(CLI::PositiveNumber)->capture_default_str();
  analyze->add_option("--max-expansions", o.max_expansions, "Search expansion ceiling")
      ->capture_default_str();
  analyze->add_option("-o,--output", o.output, "Output file (default: stdout)");

  auto* serve = app.add_subcommand("serve", "Run the workbench analysis service");
  serve->add_option("--host", o.host, "Listen address")->capture_default_str();
  serve->add_option("--port", o.port, "Listen port")->capture_default_str();
  serve->add_option("--max-body-bytes", o.max_body_bytes, "Request size limit")
      ->capture_default_str();
  serve->add_option("--max-expansions", o.max_expansions, "Per-request search ceiling")
      ->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "Print the asset catalog");
  catalog->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember(std::vector<std::string>{"text", "json"}))->capture_default_str();
  catalog->add_option("-o,--output", o.output, "Output file (default: stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());

  try
  {
    app.parse(static_cast<int>(argv.size()), argv.data());
  }
  catch (const CLI::CallForHelp&)
  {
    out << app.help();
    return kOk;
  }
  catch (const CLI::ParseError& e)
  {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  AssetCatalog assets = AssetCatalog::builtin();
  try
  {
    assets = catalog_from_environment();
  }
  catch (const CatalogError& e)
  {
    err << "error: asset catalog: " << e.what() << "\n";
    return kInvalid;
  }

  if (validate->parsed())
    return do_validate(o, assets, out, err);
  if (analyze->parsed())
    return do_analyze(o, assets, out, err);
  if (catalog->parsed())
    return do_catalog(o, assets, out, err);
  if (serve->parsed())
    return do_serve(o, assets, err);
  return kUsage;
}

} // namespace agenthellm::cli
