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

#include "oracles.h"
#include "traitnorm/error.h"
#include "traitnorm/ingest.h"
#include "traitnorm/normalizer.h"
#include "traitnorm/query.h"

namespace traitnorm {
namespace {

using nlohmann::json;

// p0 -KNOWS-> p1, p0 -KNOWS-> p2, p1 -LIKES-> p0. p2 has no city.
PropertyGraph People() {
  PropertyGraph g;
  NodeId p0 = g.CreateNode({"Person"}, {{"name", PropertyValue("a")}, {"city", PropertyValue("X")}});
  NodeId p1 = g.CreateNode({"Person"}, {{"name", PropertyValue("b")}, {"city", PropertyValue("Y")}});
  NodeId p2 = g.CreateNode({"Person"}, {{"name", PropertyValue("c")}});
  g.CreateEdge(p0, p1, "KNOWS");
  g.CreateEdge(p0, p2, "KNOWS");
  g.CreateEdge(p1, p0, "LIKES");
  return g;
}

QueryResult RunPlan(const char* plan, const PropertyGraph& g) { return Execute(*ParsePlan(plan), g); }

TEST(Query, FilterAndProjectCountReads) {
  QueryResult r = RunPlan(R"((project (filter (scan p Person) (= p.city "X")) p.name))", People());
  EXPECT_EQ(r.rows, (std::vector<json>{json::array({"a"})}));
  // probe 1 + fetch 3, three city reads, one name read.
  EXPECT_EQ(r.stats.accesses, 8u);
  ASSERT_EQ(r.stats.trace.size(), 3u);
  EXPECT_EQ(r.stats.trace[0].op, "scan");
  EXPECT_EQ(r.stats.trace[1].accesses, 3u);
  EXPECT_FALSE(r.stats.cartesian);
}

TEST(Query, ExpandCountsOnlyMatchingEdges) {
  QueryResult r = RunPlan("(project (expand (scan p Person) p -> KNOWS q Person) q.name)", People());
  EXPECT_EQ(r.rows, (std::vector<json>{json::array({"b"}), json::array({"c"})}));
  // scan 4; two KNOWS edges, each an edge fetch and a node fetch; two reads.
  EXPECT_EQ(r.stats.accesses, 10u);

  QueryResult in = RunPlan("(project (expand (scan p Person) p <- LIKES q) q.name)", People());
  EXPECT_EQ(in.rows, (std::vector<json>{json::array({"b"})}));
}

TEST(Query, ProductSetsCartesianFlag) {
  QueryResult r = RunPlan("(filter (product (scan a Person) (scan b Person)) (= a.city b.city))", People());
  EXPECT_TRUE(r.stats.cartesian);
  EXPECT_EQ(r.rows.size(), 2u);
  // scans 8; nine lhs reads, six rhs reads where a.city exists.
  EXPECT_EQ(r.stats.accesses, 23u);
}

TEST(Query, JoinMatchesProductFilter) {
  PropertyGraph g = People();
  QueryResult join = RunPlan("(project (join (scan a Person) (scan b Person) (= a.city b.city)) a.name b.name)", g);
  QueryResult prod = RunPlan(
      "(project (filter (product (scan a Person) (scan b Person)) (= a.city b.city)) a.name b.name)", g);
  EXPECT_EQ(join.rows, prod.rows);
  EXPECT_FALSE(join.stats.cartesian);
}

TEST(Query, AggregateGroupsAndCollects) {
  QueryResult r = RunPlan("(aggregate (expand (scan p Person) p -> KNOWS q) (group p.name) (count))", People());
  EXPECT_EQ(r.rows, (std::vector<json>{json::array({"a", 2})}));
  QueryResult c = RunPlan("(aggregate (scan p Person) (group p.city) (collect p.name))", People());
  ASSERT_EQ(c.rows.size(), 3u);
  EXPECT_EQ(c.rows[0], json::array({nullptr, json::array({"c"})}));
}

TEST(Query, RowsAreSortedByValue) {
  PropertyGraph g;
  for (int v : {10, 9, 100, -1}) g.CreateNode({"N"}, {{"v", PropertyValue(int64_t{v})}});
  QueryResult r = RunPlan("(project (scan n N) n.v)", g);
  EXPECT_EQ(r.rows, (std::vector<json>{json::array({-1}), json::array({9}), json::array({10}),
                                       json::array({100})}));
  JsonLess less;
  EXPECT_TRUE(less(json::array({"Aachen"}), json::array({"Berlin"})));
  EXPECT_FALSE(less(json::array({"Berlin"}), json::array({"Aachen"})));
  EXPECT_TRUE(less(json(2), json(2.5)));
}

TEST(Query, FormatParsesBack) {
  for (const char* text :
       {"(project (filter (scan p Person) (= p.city \"X\") (= p.n 3)) p.name p)",
        "(aggregate (expand (scan t T) t <- HAS_TRAIT c Customer) (group t.city) (collect c.name))",
        "(project (join (scan a A) (scan b B) (= a.k b.k)) a.k)"}) {
    PlanPtr p = ParsePlan(text);
    EXPECT_EQ(FormatPlan(*ParsePlan(FormatPlan(*p))), FormatPlan(*p)) << text;
  }
}

TEST(Query, RejectsBadPlans) {
  PropertyGraph g = People();
  for (const char* bad : {"(scan p)", "(project (scan p Person) q.name)",
                          "(filter (project (scan p Person) p.name) (= p.name \"a\"))",
                          "(product (scan p Person) (scan p Person))", "(scan p Person",
                          "(frobnicate p)"}) {
    EXPECT_THROW(Execute(*ParsePlan(bad), g), QueryError) << bad;
  }
  EXPECT_THROW(RunPlan("(scan p Robot)", g), QueryError);
  ExecuteOptions lax;
  lax.validate = false;
  EXPECT_TRUE(Execute(*ParsePlan("(scan p Robot)"), g, lax).rows.empty());
}

TEST(Workload, ParsesTestsAndFlags) {
  std::vector<WorkloadTest> tests = ParseWorkload(R"(
    ; comment
    (test t1 "first" (flags x-y) (embedded (scan a A)) (trait (scan b B)))
    (test t2 "second" (embedded (scan a A)) (trait (scan b B))))");
  ASSERT_EQ(tests.size(), 2u);
  EXPECT_EQ(tests[0].flags, std::set<std::string>{"x-y"});
  EXPECT_EQ(tests[1].purpose, "second");
  EXPECT_THROW(ParseWorkload("(test t1 \"x\" (embedded (scan a A)))"), QueryError);
}

class NorthwindWorkload : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    auto dir = testing::DataDir() / "northwind";
    pre_ = new PropertyGraph(LoadCsvGraph(MappingSpec::Load(dir / "mapping.json"), dir).graph);
    NormalizationRun run = Normalize(*pre_, NormalizerConfig::Load(dir / "normalize.json"));
    post_ = new PropertyGraph(std::move(run.graph));
    rows_ = RunWorkload(LoadWorkload(dir / "workload.sexp"), *pre_, *post_);
  }
  static void TearDownTestSuite() {
    delete pre_;
    delete post_;
  }
  const WorkloadRow& Row(const std::string& name) {
    for (const auto& r : rows_) {
      if (r.name == name) return r;
    }
    throw std::runtime_error(name);
  }

  static PropertyGraph* pre_;
  static PropertyGraph* post_;
  static std::vector<WorkloadRow> rows_;
};

PropertyGraph* NorthwindWorkload::pre_ = nullptr;
PropertyGraph* NorthwindWorkload::post_ = nullptr;
std::vector<WorkloadRow> NorthwindWorkload::rows_;

TEST_F(NorthwindWorkload, EveryTestIsEquivalent) {
  ASSERT_EQ(rows_.size(), 5u);
  for (const auto& r : rows_) EXPECT_TRUE(r.equivalent) << r.name;
}

TEST_F(NorthwindWorkload, ResultSizesMatchCountingOracle) {
  json golden = testing::Golden("northwind_counts.json");
  EXPECT_EQ(Row("q3").pre.rows.size(), golden.at("orders_shipped_to_germany").get<size_t>());
  EXPECT_EQ(Row("q4").pre.rows.size(), golden.at("customers_in_london_uk").get<size_t>());
  EXPECT_EQ(Row("q5").pre.rows.size(), golden.at("supplier_customer_same_city_pairs").get<size_t>());
}

TEST_F(NorthwindWorkload, AccessCountsAreFrozen) {
  // Metadata scans over the raw graph.
  EXPECT_EQ(Row("q1").pre.stats.accesses, 274u);
  EXPECT_EQ(Row("q2").pre.stats.accesses, 88u);
  EXPECT_EQ(Row("q3").pre.stats.accesses, 1783u);
  EXPECT_EQ(Row("q3").post.stats.accesses, 545u);
  EXPECT_TRUE(Row("q5").pre.stats.cartesian);
  EXPECT_FALSE(Row("q5").post.stats.cartesian);
}

TEST_F(NorthwindWorkload, JsonOmitsTimesOnRequest) {
  json j = WorkloadJson(rows_, false);
  EXPECT_FALSE(j[0].at("pre").contains("time_ms"));
  EXPECT_EQ(j[0].at("flags"), json::array({"access-trend-undefined"}));
}

}  // namespace
}  // namespace traitnorm
