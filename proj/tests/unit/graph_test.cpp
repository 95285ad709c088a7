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


#include "support/fixtures.hpp"

#include <agenthellm/graph.hpp>

#include <gtest/gtest.h>

using namespace agenthellm;
using namespace agenthellm::testing;

TEST(StrongId, ComparesByValue)
{
  EXPECT_EQ(NodeId("a"), NodeId("a"));
  EXPECT_LT(NodeId("a"), NodeId("b"));
  EXPECT_TRUE(EdgeId().empty());
  EXPECT_EQ(EdgeId("e1").str(), "e1");
}

TEST(EdgeKind, RoundTripsThroughStrings)
{
  for (const auto k : {EdgeKind::Read, EdgeKind::Write, EdgeKind::Communicate, EdgeKind::Respond})
    EXPECT_EQ(edge_kind_from_string(to_string(k)), k);
  EXPECT_FALSE(edge_kind_from_string("broadcast").has_value());
  EXPECT_EQ(node_kind_from_string("datasource"), NodeKind::Datasource);
  EXPECT_FALSE(node_kind_from_string("Actor").has_value());
}

TEST(ThreatGraph, OrdersEntitiesById)
{
  const ThreatGraph g({actor("b"), actor("a"), datasource("c")},
                      {edge("z", "a", "b", EdgeKind::Communicate),
                       edge("m", "b", "a", EdgeKind::Communicate)});
  EXPECT_EQ(g.nodes()[0].id, NodeId("a"));
  EXPECT_EQ(g.edges()[0].id, EdgeId("m"));
  EXPECT_EQ(g.node_index(NodeId("c")), 2u);
  EXPECT_EQ(g.node_index(NodeId("missing")), ThreatGraph::npos);
  EXPECT_EQ(g.find_edge(EdgeId("z"))->from, NodeId("a"));
  EXPECT_EQ(g.find_node(NodeId("nope")), nullptr);
}

TEST(ThreatGraph, OutgoingEdgesWithoutAnyIsEmpty)
{
  const auto g = fixture("fig4a.json");
  EXPECT_TRUE(g.outgoing_edges(NodeId("memory")).empty());
}

TEST(ThreatGraph, OutgoingEdgesFilteredByWrite)
{
  const auto g = fixture("fig4a.json");
  const auto writes = g.outgoing_edges(NodeId("car_agent"), EdgeKindSet{EdgeKind::Write});
  ASSERT_EQ(writes.size(), 1u);
  EXPECT_EQ(writes[0].to, NodeId("memory"));
  EXPECT_EQ(writes[0].kind, EdgeKind::Write);
}

TEST(ThreatGraph, OutgoingEdgesAllKindsMatchesUnfiltered)
{
  const auto g = fixture("fig4a.json");
  EXPECT_EQ(g.outgoing_edges(NodeId("car_agent"), EdgeKindSet::all()),
            g.outgoing_edges(NodeId("car_agent")));
  EXPECT_EQ(g.outgoing_edges(NodeId("car_agent")).size(), 3u);
}

TEST(ThreatGraph, OutgoingEdgesOrderedById)
{
  const ThreatGraph g({actor("a"), actor("b")},
                      {edge("e9", "a", "b", EdgeKind::Communicate),
                       edge("e1", "a", "b", EdgeKind::Communicate),
                       edge("e5", "a", "b", EdgeKind::Respond)});
  const auto out = g.outgoing_edges(NodeId("a"));
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].id, EdgeId("e1"));
  EXPECT_EQ(out[1].id, EdgeId("e5"));
  EXPECT_EQ(out[2].id, EdgeId("e9"));
}

TEST(ThreatGraph, OutgoingEdgesUnknownNodeThrows)
{
  const auto g = fixture("fig4a.json");
  EXPECT_THROW(g.outgoing_edges(NodeId("ghost")), std::out_of_range);
}

TEST(ThreatGraph, HasWatch)
{
  const auto g = fixture("fig6a.json");
  EXPECT_TRUE(g.has_watch(NodeId("car_agent"), NodeId("ds_trigger")));
  EXPECT_FALSE(g.has_watch(NodeId("attacker"), NodeId("ds_trigger")));
  EXPECT_THROW(g.has_watch(NodeId("ghost"), NodeId("ds_trigger")), std::out_of_range);
}

TEST(ThreatGraph, EqualityIgnoresInputOrder)
{
  const ThreatGraph a({actor("x"), actor("y")}, {edge("e", "x", "y", EdgeKind::Communicate)});
  const ThreatGraph b({actor("y"), actor("x")}, {edge("e", "x", "y", EdgeKind::Communicate)});
  EXPECT_EQ(a, b);
}
