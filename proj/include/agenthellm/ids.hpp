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

#ifndef AGENTHELLM__IDS_HPP
#define AGENTHELLM__IDS_HPP

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace agenthellm {

/// Opaque string identifier, tagged so node and edge ids cannot be mixed up.
template<typename Tag>
class StrongId
{
public:
  StrongId() = default;
  explicit StrongId(std::string value) : _value(std::move(value)) {}

  const std::string& str() const noexcept { return _value; }
  bool empty() const noexcept { return _value.empty(); }

  friend auto operator<=>(const StrongId&, const StrongId&) = default;
  friend bool operator==(const StrongId&, const StrongId&) = default;

  friend std::ostream& operator<<(std::ostream& os, const StrongId& id)
  {
    return os << id._value;
  }

private:
  std::string _value;
};

struct NodeIdTag {};
struct EdgeIdTag {};

using NodeId = StrongId<NodeIdTag>;
using EdgeId = StrongId<EdgeIdTag>;

} // namespace agenthellm

template<typename Tag>
struct std::hash<agenthellm::StrongId<Tag>>
{
  std::size_t operator()(const agenthellm::StrongId<Tag>& id) const noexcept
  {
    return std::hash<std::string>{}(id.str());
  }
};

#endif // AGENTHELLM__IDS_HPP
