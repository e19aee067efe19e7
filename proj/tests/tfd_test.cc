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

#include "oracles.h"
#include "traitnorm/error.h"
#include "traitnorm/tfd.h"

namespace traitnorm {
namespace {

using testing::MaskDep;

FamilyUniverse Letters(size_t n) {
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));
  return FamilyUniverse(names);
}

TEST(Closure, TextbookChain) {
  FamilyUniverse u = Letters(4);
  DependencySet sigma = {{u.Set({"A"}), u.Set({"B"})}, {u.Set({"B", "C"}), u.Set({"D"})}};
  EXPECT_EQ(Closure(u.Set({"A"}), sigma, u), u.Set({"A", "B"}));
  EXPECT_EQ(Closure(u.Set({"A", "C"}), sigma, u), u.Set({"A", "B", "C", "D"}));
  EXPECT_TRUE(Implies(sigma, {u.Set({"A", "C"}), u.Set({"D"})}, u));
  EXPECT_FALSE(Implies(sigma, {u.Set({"A"}), u.Set({"D"})}, u));
  // Reflexivity.
  EXPECT_TRUE(Implies({}, {u.Set({"A", "B"}), u.Set({"B"})}, u));
}

TEST(Closure, RejectsIdsOutsideUniverse) {
  FamilyUniverse u = Letters(2);
  EXPECT_THROW(Closure({5}, {}, u), DependencyError);
}

TEST(ClosureProperty, MatchesNaiveFixpoint) {
  std::mt19937_64 rng(7);
  size_t cases = 0;
  for (size_t n = 1; n <= 5; ++n) {
    FamilyUniverse u = Letters(n);
    for (int i = 0; i < 400; ++i, ++cases) {
      std::vector<MaskDep> deps = testing::RandomMaskDeps(rng, n, 6);
      DependencySet sigma = testing::ToDependencySet(deps);
      for (testing::Mask x = 0; x < (testing::Mask{1} << n); ++x) {
        ASSERT_EQ(testing::ToMask(Closure(testing::ToFamilySet(x), sigma, u)),
                  testing::NaiveClosure(x, deps));
      }
    }
  }
  EXPECT_GE(cases, 1000u);
}

TEST(ClosureProperty, ImplicationMatchesSmallInstanceSemantics) {
  std::mt19937_64 rng(8);
  size_t implied = 0, not_implied = 0;
  for (size_t n = 1; n <= 5; ++n) {
    FamilyUniverse u = Letters(n);
    for (int i = 0; i < 250; ++i) {
      std::vector<MaskDep> deps = testing::RandomMaskDeps(rng, n, 5);
      MaskDep fd = testing::RandomMaskDep(rng, n);
      bool semantic = testing::SemanticallyImplies(n, deps, fd);
      bool syntactic = Implies(testing::ToDependencySet(deps),
                               {testing::ToFamilySet(fd.lhs), testing::ToFamilySet(fd.rhs)}, u);
      ASSERT_EQ(syntactic, semantic);
      (semantic ? implied : not_implied)++;
    }
  }
  // Both outcomes must be exercised for the comparison to mean anything.
  EXPECT_GT(implied, 100u);
  EXPECT_GT(not_implied, 100u);
}

TEST(Universe, FamiliesContributeWholeAndComponentNames) {
  FamilyUniverse u = FamilyUniverse::FromFamilies({{"Loc", {"city", "country"}, {}}});
  ASSERT_EQ(u.size(), 3u);
  EXPECT_TRUE(u.Find("Loc"));
  EXPECT_TRUE(u.Find("Loc.city"));
  EXPECT_FALSE(u.binding(*u.Find("Loc"))->component);
  EXPECT_EQ(u.binding(*u.Find("Loc.country"))->component, 1u);
  EXPECT_THROW(u.Require("Loc.zip"), DependencyError);
}

TEST(Parse, AcceptsCommentsAndCollapsesDuplicates) {
  FamilyUniverse u = Letters(3);
  DependencySet s = ParseDependencies("# header\nA -> B\n\nA,C -> B # trailing\nA->B\n", u);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(FormatDependency(*s.begin(), u), "A -> B");
}

TEST(Parse, ReportsPositionAndKind) {
  FamilyUniverse u = Letters(2);
  try {
    ParseDependencies("A -> B\nA -> Z\n", u);
    FAIL();
  } catch (const DependencyError& e) {
    EXPECT_EQ(e.code(), DependencyError::Code::kUndeclaredFamily);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  for (const char* bad : {"A B\n", "A ->\n", "-> B\n", "A -> B -> A\n", "A,,B -> A\n"}) {
    try {
      ParseDependencies(bad, u);
      ADD_FAILURE() << bad;
    } catch (const DependencyError& e) {
      EXPECT_TRUE(e.code() == DependencyError::Code::kSyntax ||
                  e.code() == DependencyError::Code::kEmpty)
          << bad;
    }
  }
}

Assignment Row(uint64_t id, std::vector<std::optional<std::string>> values) {
  return {ElementRef::Node(id), std::move(values)};
}

TEST(Holds, MissingYIsReportedNotViolated) {
  FamilyUniverse u = Letters(2);
  TraitDependency fd{u.Set({"A"}), u.Set({"B"})};
  std::vector<Assignment> rows = {Row(0, {"x", "1"}), Row(1, {"x", std::nullopt}),
                                  Row(2, {std::nullopt, "2"})};
  Verdict v = Holds(rows, fd, u);
  EXPECT_TRUE(v.satisfied);
  EXPECT_EQ(v.covered, 2u);
  EXPECT_EQ(v.skipped, 1u);
  ASSERT_EQ(v.missing_y.size(), 1u);
  EXPECT_EQ(v.missing_y[0], ElementRef::Node(1));

  rows.push_back(Row(3, {"x", "9"}));
  v = Holds(rows, fd, u);
  ASSERT_FALSE(v.satisfied);
  ASSERT_EQ(v.violations.size(), 1u);
  EXPECT_EQ(v.violations[0].elements.size(), 2u);
}

TEST(HoldsProperty, MatchesPairwiseOracle) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 2000; ++round) {
    const size_t n = 1 + rng() % 4;
    FamilyUniverse u = Letters(n);
    std::vector<Assignment> rows(rng() % 8);
    for (size_t i = 0; i < rows.size(); ++i) {
      rows[i].element = ElementRef::Node(i);
      for (size_t a = 0; a < n; ++a) {
        if (rng() % 5 == 0) {
          rows[i].values.push_back(std::nullopt);
        } else {
          rows[i].values.push_back(std::to_string(rng() % 2));
        }
      }
    }
    MaskDep m = testing::RandomMaskDep(rng, n);
    TraitDependency fd{testing::ToFamilySet(m.lhs), testing::ToFamilySet(m.rhs)};
    ASSERT_EQ(Holds(rows, fd, u).satisfied, testing::PairwiseHolds(rows, fd)) << "round " << round;
  }
}

TEST(Assignments, LinkedAndEmbeddedAgree) {
  std::vector<TraitFamily> families = {{"Loc", {"city", "country"}, {}}};
  FamilyUniverse u = FamilyUniverse::FromFamilies(families);
  PropertyGraph embedded;
  embedded.CreateNode({"C"}, {{"city", PropertyValue("Lyon")}, {"country", PropertyValue("FR")}});
  embedded.CreateNode({"C"}, {{"city", PropertyValue("Oslo")}});
  auto e = EmbeddedAssignments(embedded, families, u);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].values[*u.Find("Loc.city")], PropertyValue("Lyon").ToJson().dump());
  EXPECT_FALSE(e[1].values[*u.Find("Loc.country")]);
  EXPECT_TRUE(e[0].values[*u.Find("Loc")]);
  EXPECT_NE(e[0].values[*u.Find("Loc")], e[1].values[*u.Find("Loc")]);
}

TEST(Assignments, TwoLinksToOneFamilyIsMalformed) {
  std::vector<TraitFamily> families = {{"Loc", {"city"}, {}}};
  FamilyUniverse u = FamilyUniverse::FromFamilies(families);
  PropertyGraph g;
  NodeId c = g.CreateNode({"C"});
  TraitCatalog catalog;
  for (const char* city : {"Lyon", "Oslo"}) {
    NodeId t = g.CreateNode({"Trait", "Loc"},
                            {{"family", PropertyValue("Loc")}, {"city", PropertyValue(city)}},
                            WriteMode::kPrivileged);
    catalog.Insert("Loc", {PropertyValue(city)}, t);
    g.CreateEdge(c, t, "HAS_TRAIT");
  }
  try {
    LinkedAssignments(g, catalog, families, u);
    FAIL();
  } catch (const DependencyError& e) {
    EXPECT_EQ(e.code(), DependencyError::Code::kMalformedLinking);
  }
}

}  // namespace
}  // namespace traitnorm
