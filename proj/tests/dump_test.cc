// Copyright 2026 The traitnorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "traitnorm/dump.h"
#include "traitnorm/error.h"
#include "traitnorm/normalizer.h"
#include "traitnorm/synth.h"

namespace traitnorm {
namespace {

TEST(Dump, RoundTripIsByteIdentical) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    SyntheticGraph s = RandomGraph(rng, 60, 6);
    std::string first = DumpToString(s.graph);
    std::istringstream in(first);
    PropertyGraph back = ReadDump(in);
    EXPECT_EQ(DumpToString(back), first);
    EXPECT_TRUE(back.IndexesConsistent());
  }
}

TEST(Dump, KeepsIdsAcrossDeletionsAndTraits) {
  PropertyGraph g;
  NodeId a = g.CreateNode({"A"}, {{"d", PropertyValue(Date{1997, 1, 2})}});
  NodeId gone = g.CreateNode({"A"});
  NodeId b = g.CreateNode({"B"});
  g.RemoveNode(gone);
  NodeId t = g.CreateNode({"Trait", "F"}, {{"family", PropertyValue("F")}}, WriteMode::kPrivileged);
  EdgeId e = g.CreateEdge(a, b, "R", {{"w", PropertyValue(0.25)}});
  g.CreateEdge(ElementRef::Edge(e), t, "HAS_TRAIT");

  std::istringstream in(DumpToString(g));
  PropertyGraph back = ReadDump(in);
  EXPECT_FALSE(back.HasNode(gone));
  EXPECT_TRUE(back.node(t).has_label("Trait"));
  EXPECT_EQ(*back.property(ElementRef::Node(a), "d"), PropertyValue(Date{1997, 1, 2}));
  EXPECT_EQ(back.OutEdges(ElementRef::Edge(e)).size(), 1u);
  // New ids continue after the restored ones.
  EXPECT_GT(back.CreateNode({"A"}), t);
}

TEST(Dump, RejectsMalformedInput) {
  const std::string header =
      "{\"format\":\"traitnorm-dump/1\",\"kind\":\"header\",\"next_edge_id\":1,\"next_node_id\":1}\n";
  for (const std::string& text :
       {std::string("not json\n"), std::string("{\"kind\":\"node\",\"id\":0}\n"),
        header + "{\"id\":0,\"kind\":\"node\",\"labels\":[\"A\"],\"props\":{\"k\":[1,2]}}\n",
        header + "{\"id\":0,\"kind\":\"node\",\"labels\":[\"A\"],\"props\":{}}\n"
                 "{\"dst\":4,\"id\":0,\"kind\":\"edge\",\"label\":\"R\",\"props\":{},\"src\":0}\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(ReadDump(in), GraphError) << text;
  }
}

TEST(Dump, NormalizedGraphRoundTrips) {
  SyntheticSpec spec;
  spec.nodes = 300;
  spec.edge_metadata = true;
  SyntheticGraph s = GenerateSynthetic(spec);
  NormalizerConfig config;
  config.families = s.families;
  NormalizationRun run = Normalize(s.graph, config);
  ASSERT_TRUE(run.report.committed);
  std::string text = DumpToString(run.graph);
  std::istringstream in(text);
  EXPECT_EQ(DumpToString(ReadDump(in)), text);
}

}  // namespace
}  // namespace traitnorm
