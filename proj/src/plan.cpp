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


#include <agenthellm/plan.hpp>

#include <algorithm>
#include <tuple>

namespace agenthellm {

std::string narrate(const AttackStep& step)
{
  const auto& p = step.push;
  const auto& from = p.from.str();
  const auto& to = p.to.str();
  switch (p.kind)
  {
    case EdgeKind::Communicate:
      return from + " communicates with " + to;
    case EdgeKind::Respond:
      return from + " responds to " + to;
    case EdgeKind::Write:
      return from + " writes to " + to + ", consumed by " + step.holder.str();
    case EdgeKind::Read:
      return from + " reads " + to;
  }
  return from + " -> " + to;
}

bool plan_less(const AttackPath& a, const AttackPath& b)
{
  if (a.total_cost != b.total_cost)
    return a.total_cost < b.total_cost;
  if (a.steps.size() != b.steps.size())
    return a.steps.size() < b.steps.size();
  return std::lexicographical_compare(
      a.steps.begin(), a.steps.end(), b.steps.begin(), b.steps.end(),
      [](const AttackStep& x, const AttackStep& y)
      {
        return std::tie(x.push.edge, x.holder) < std::tie(y.push.edge, y.holder);
      });
}

bool same_actions(const AttackPath& a, const AttackPath& b)
{
  if (a.total_cost != b.total_cost || a.steps.size() != b.steps.size())
    return false;
  for (std::size_t i = 0; i < a.steps.size(); ++i)
  {
    const auto& x = a.steps[i];
    const auto& y = b.steps[i];
    if (x.push != y.push || x.holder != y.holder || x.cost != y.cost
        || x.activation != y.activation || x.consumption != y.consumption)
      return false;
  }
  return true;
}

} // namespace agenthellm
