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


#ifndef AGENTHELLM_TESTS__FIXTURES_HPP
#define AGENTHELLM_TESTS__FIXTURES_HPP

#include <agenthellm/graph_io.hpp>
#include <agenthellm/planner.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace agenthellm::testing {

inline std::filesystem::path fixture_path(const std::string& name)
{
  return std::filesystem::path(AGENTHELLM_FIXTURE_DIR) / name;
}

inline std::filesystem::path golden_path(const std::string& name)
{
  return std::filesystem::path(AGENTHELLM_GOLDEN_DIR) / name;
}

inline std::string read_text(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ThreatGraph fixture(const std::string& name)
{
  return load_graph_file(fixture_path(name));
}

inline AnalysisRequest make_request(const std::string& attacker, const std::string& target)
{
  AnalysisRequest r;
  r.attacker = NodeId(attacker);
  r.target = NodeId(target);
  return r;
}

inline Node actor(const std::string& id, std::set<std::string> assets = {}, bool attacker = false)
{
  return Node{NodeId(id), NodeKind::Actor, id, std::move(assets), attacker};
}

inline Node datasource(const std::string& id)
{
  return Node{NodeId(id), NodeKind::Datasource, id, {}, false};
}

inline Edge edge(const std::string& id, const std::string& from, const std::string& to,
                 EdgeKind kind, std::int64_t cost = 1)
{
  return Edge{EdgeId(id), NodeId(from), NodeId(to), kind, cost};
}

inline Watch watch(const std::string& actor, const std::string& datasource)
{
  return Watch{NodeId(actor), NodeId(datasource)};
}

} // namespace agenthellm::testing

#endif // AGENTHELLM_TESTS__FIXTURES_HPP
