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


#ifndef AGENTHELLM__GRAPH_IO_HPP
#define AGENTHELLM__GRAPH_IO_HPP

#include <agenthellm/asset_catalog.hpp>
#include <agenthellm/graph.hpp>
#include <agenthellm/validation.hpp>

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace agenthellm {

inline constexpr int kGraphFormatVersion = 1;

/// The document is not well-formed JSON, or does not match the graph format
/// (wrong types, unknown keys, unsupported version).
class GraphFormatError : public std::runtime_error
{
public:
  /// `location` is a byte offset for JSON syntax errors and a JSON pointer
  /// for schema errors.
  GraphFormatError(bool syntax, std::string location, const std::string& msg);

  bool is_syntax_error() const noexcept { return _syntax; }
  const std::string& location() const noexcept { return _location; }

private:
  bool _syntax;
  std::string _location;
};

/// The document is well-formed but describes an invalid graph.
class GraphSemanticError : public std::runtime_error
{
public:
  explicit GraphSemanticError(ValidationReport report);
  const ValidationReport& report() const noexcept { return _report; }

private:
  ValidationReport _report;
};

/// Decodes a graph document without semantic validation.
/// Throws GraphFormatError.
ThreatGraph graph_from_json(const nlohmann::json& doc);
ThreatGraph read_graph_document(std::string_view text);

/// read_graph_document followed by validate_graph; throws GraphSemanticError
/// when the report is non-empty.
ThreatGraph parse_graph(
    std::string_view text,
    const AssetCatalog& catalog = AssetCatalog::builtin());

ThreatGraph load_graph_file(
    const std::filesystem::path& path,
    const AssetCatalog& catalog = AssetCatalog::builtin());

/// Canonical document: fixed key order, entries sorted by id.
nlohmann::ordered_json graph_to_json(const ThreatGraph& graph);
std::string serialize_graph(const ThreatGraph& graph);

/// "sha256:<hex>" over serialize_graph(graph).
std::string graph_digest(const ThreatGraph& graph);

nlohmann::ordered_json report_to_json(const ValidationReport& report);

} // namespace agenthellm

#endif // AGENTHELLM__GRAPH_IO_HPP
