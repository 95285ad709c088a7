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


#ifndef AGENTHELLM__VALIDATION_HPP
#define AGENTHELLM__VALIDATION_HPP

#include <agenthellm/asset_catalog.hpp>
#include <agenthellm/graph.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace agenthellm {

enum class ViolationCode
{
  EmptyId,
  DuplicateId,
  UnknownEndpoint,
  EdgeEndpointKind,
  SelfLoop,
  NonPositiveCost,
  AssetOnDatasource,
  UnknownAsset,
  WatchUnknownNode,
  WatchEndpointKind,
  WatchWithoutRead,
  DuplicateWatch,
  BadInitialChannels,
};

/// Machine-readable form, e.g. "EDGE_ENDPOINT_KIND".
std::string_view to_string(ViolationCode code) noexcept;

struct Violation
{
  ViolationCode code;
  std::string id; // offending node/edge id, or "actor->datasource" for watches
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport
{
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool contains(ViolationCode code) const noexcept;
};

/// Checks every graph invariant and reports all violations found. Asset ids
/// are resolved against `catalog`.
ValidationReport validate_graph(
    const ThreatGraph& graph,
    const AssetCatalog& catalog = AssetCatalog::builtin());

using Channel = std::pair<NodeId, NodeId>; // (initiator, responder)

/// Decodes the initial_channels metadata entry. Returns an empty list when
/// the key is absent and std::nullopt when the value is malformed.
std::optional<std::vector<Channel>> decode_initial_channels(
    const ThreatGraph& graph);

} // namespace agenthellm

#endif // AGENTHELLM__VALIDATION_HPP
