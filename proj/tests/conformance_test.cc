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

#include "traitnorm/conformance.h"
#include "traitnorm/normalizer.h"

namespace traitnorm {
namespace {

const std::vector<TraitFamily> kFamilies = {{"LocTrait", {"city", "country"}, {}}};

struct Fixture {
  PropertyGraph graph;
  NodeId customer = 0;
  NodeId trait = 0;
};

Fixture Normalized() {
  PropertyGraph g;
  g.CreateNode({"Customer"}, {{"city", PropertyValue("Oslo")}, {"country", PropertyValue("NO")}});
  g.CreateNode({"Customer"}, {{"city", PropertyValue("Oslo")}, {"country", PropertyValue("NO")}});
  NormalizerConfig config;
  config.families = kFamilies;
  NormalizationRun run = Normalize(g, config);
  Fixture f{run.graph, 0, *run.graph.NodesWithLabel("LocTrait").begin()};
  return f;
}

NodeId AddTrait(PropertyGraph& g, const char* family, PropertyMap props) {
  props.emplace("family", PropertyValue(family));
  return g.CreateNode({"Trait", family}, std::move(props), WriteMode::kPrivileged);
}

size_t Count(const PropertyGraph& g, ConditionGroup group) {
  return CheckTraitNormalForm(g, kFamilies).Count(group);
}

TEST(Conformance, PipelineOutputConforms) {
  Fixture f = Normalized();
  EXPECT_TRUE(CheckTraitNormalForm(f.graph, kFamilies).conforming());
}

TEST(Conformance, EmbeddedInputFailsExclusivity) {
  PropertyGraph g;
  g.CreateNode({"Customer"}, {{"city", PropertyValue("Oslo")}});
  ConformanceReport r = CheckTraitNormalForm(g, kFamilies);
  EXPECT_FALSE(r.conforming());
  EXPECT_EQ(r.Count(ConditionGroup::kExclusivity), 1u);
}

TEST(Conformance, DuplicateTraitFailsCanonicality) {
  Fixture f = Normalized();
  NodeId dup = AddTrait(f.graph, "LocTrait", {{"city", PropertyValue("Oslo")}, {"country", PropertyValue("NO")}});
  f.graph.CreateEdge(f.customer, dup, "HAS_TRAIT");
  EXPECT_GE(Count(f.graph, ConditionGroup::kCanonicality), 1u);
}

TEST(Conformance, ResidualEmbeddedKeyFailsExclusivity) {
  Fixture f = Normalized();
  f.graph.SetProperty(ElementRef::Node(f.customer), "city", PropertyValue("Oslo"));
  EXPECT_EQ(Count(f.graph, ConditionGroup::kExclusivity), 1u);
}

TEST(Conformance, ForeignEdgeIntoTraitFailsExclusivity) {
  Fixture f = Normalized();
  f.graph.CreateEdge(f.customer, f.trait, "LIVES_IN");
  EXPECT_EQ(Count(f.graph, ConditionGroup::kExclusivity), 1u);
}

TEST(Conformance, LinkShapeViolations) {
  Fixture f = Normalized();
  NodeId other = f.graph.CreateNode({"Customer"});
  f.graph.CreateEdge(f.customer, other, "HAS_TRAIT");
  EXPECT_EQ(Count(f.graph, ConditionGroup::kExclusivity), 1u);

  Fixture g = Normalized();
  g.graph.CreateEdge(ElementRef::Node(g.customer), g.trait, "HAS_TRAIT", {{"w", PropertyValue(int64_t{1})}});
  EXPECT_GE(Count(g.graph, ConditionGroup::kExclusivity), 1u);
}

TEST(Conformance, OrphanTraitFailsCanonicality) {
  Fixture f = Normalized();
  AddTrait(f.graph, "LocTrait", {{"city", PropertyValue("Rome")}, {"country", PropertyValue("IT")}});
  EXPECT_EQ(Count(f.graph, ConditionGroup::kCanonicality), 1u);
}

TEST(Conformance, MalformedTraitsFailAtomicity) {
  Fixture f = Normalized();
  NodeId unknown = AddTrait(f.graph, "ZipTrait", {{"zip", PropertyValue("0150")}});
  f.graph.CreateEdge(f.customer, unknown, "HAS_TRAIT");
  EXPECT_GE(Count(f.graph, ConditionGroup::kAtomicity), 1u);

  Fixture g = Normalized();
  g.graph.SetProperty(ElementRef::Node(g.trait), "zip", PropertyValue("0150"));
  EXPECT_GE(Count(g.graph, ConditionGroup::kAtomicity), 1u);

  Fixture h = Normalized();
  h.graph.RemoveProperty(ElementRef::Node(h.trait), "family");
  EXPECT_GE(Count(h.graph, ConditionGroup::kAtomicity), 1u);
}

TEST(Conformance, ReportJsonListsCountsAndCapsFindings) {
  PropertyGraph g;
  for (int i = 0; i < 5; ++i) g.CreateNode({"Customer"}, {{"city", PropertyValue("Oslo")}});
  nlohmann::json j = CheckTraitNormalForm(g, kFamilies).ToJson(2);
  EXPECT_FALSE(j.at("conforming").get<bool>());
  EXPECT_EQ(j.at("exclusivity").at("count").get<size_t>(), 5u);
  EXPECT_EQ(j.at("exclusivity").at("findings").size(), 2u);
}

TEST(ValueAtomicity, FindsPackedValues) {
  PropertyGraph g;
  NodeId a = g.CreateNode({"A"}, {{"tags", PropertyValue("red;blue")},
                                  {"note", PropertyValue("a;")},
                                  {"n", PropertyValue(int64_t{3})}});
  auto findings = CheckValueAtomicity(g, {";", "|"});
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].element, ElementRef::Node(a));
  EXPECT_EQ(findings[0].key, "tags");
  EXPECT_EQ(findings[0].delimiter, ";");
}

}  // namespace
}  // namespace traitnorm
