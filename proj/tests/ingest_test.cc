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

#include <fstream>

#include "oracles.h"
#include "traitnorm/dump.h"
#include "traitnorm/error.h"
#include "traitnorm/ingest.h"

namespace traitnorm {
namespace {

namespace fs = std::filesystem;

IngestError::Code CsvError(std::string_view text) {
  try {
    ParseCsv(text);
  } catch (const IngestError& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return IngestError::Code::kMapping;
}

TEST(Csv, QuotingEscapesAndLineEnds) {
  CsvTable t = ParseCsv("\xEF\xBB\xBFid,name\r\n1,\"Smith, J\"\r\n2,\"say \"\"hi\"\"\"\n\n3,\"two\nlines\"\n");
  ASSERT_EQ(t.header, (std::vector<std::string>{"id", "name"}));
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[0][1], "Smith, J");
  EXPECT_EQ(t.rows[1][1], "say \"hi\"");
  EXPECT_EQ(t.rows[2][1], "two\nlines");
  EXPECT_EQ(t.lines, (std::vector<size_t>{2, 3, 5}));
  EXPECT_EQ(t.Column("name"), 1);
  EXPECT_EQ(t.Column("zip"), -1);
}

TEST(Csv, EmptyFieldsAreKept) {
  CsvTable t = ParseCsv("a,b,c\n,,\n\"\",x,\n");
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0], (std::vector<std::string>{"", "", ""}));
  EXPECT_EQ(t.rows[1], (std::vector<std::string>{"", "x", ""}));
}

TEST(Csv, RejectsMalformedRecords) {
  EXPECT_EQ(CsvError("a,b\n1,2,3\n"), IngestError::Code::kCsvSyntax);
  EXPECT_EQ(CsvError("a,b\n\"1,2\n"), IngestError::Code::kCsvSyntax);
  EXPECT_EQ(CsvError("a,b\n\"1\"x,2\n"), IngestError::Code::kCsvSyntax);
  EXPECT_EQ(CsvError(""), IngestError::Code::kCsvSyntax);
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("traitnorm_ingest_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name, std::ios::binary) << text;
  }

 private:
  fs::path path_;
};

MappingSpec SmallMapping() {
  return MappingSpec::FromJson(nlohmann::json::parse(R"({
    "null_values": ["", "NULL"],
    "nodes": [
      {"file": "people.csv", "label": "Person", "id": "pid",
       "properties": {"pid": "integer", "name": "text", "born": "date"}},
      {"file": "cities.csv", "label": "City", "id": "code", "properties": {"code": "text"}}
    ],
    "edges": [
      {"file": "people.csv", "label": "LIVES_IN",
       "source": {"label": "Person", "column": "pid"},
       "target": {"label": "City", "column": "city"},
       "properties": {}}
    ]})"));
}

TEST(Ingest, LoadsAndReportsSkippedRows) {
  TempDir dir;
  dir.Write("people.csv",
            "pid,name,born,city\n1,Ann,1990-01-02,OSL\n2,Bob,NULL,BER\n2,Dup,,OSL\n,Nobody,,OSL\n"
            "3,Cy,1990-02-31,OSL\n");
  dir.Write("cities.csv", "code\nOSL\n");
  IngestResult r = LoadCsvGraph(SmallMapping(), dir.path());
  EXPECT_EQ(r.report.nodes, 4u);  // 3 people + 1 city
  EXPECT_EQ(r.graph.NodesWithLabel("Person").size(), 3u);
  const FileReport& people = r.report.files[0];
  EXPECT_EQ(people.rows, 5u);
  EXPECT_EQ(people.created, 3u);
  EXPECT_EQ(people.skipped.size(), 2u);  // duplicate and empty id
  ASSERT_EQ(people.coercion_failures.size(), 1u);
  EXPECT_EQ(people.coercion_failures[0].line, 6u);

  // Edge rows resolve endpoints by value: Bob's city is unknown and the
  // empty id matches no Person; the duplicate row still names Person 2.
  const FileReport& lives = r.report.files[2];
  EXPECT_EQ(lives.created, 3u);
  EXPECT_EQ(lives.skipped.size(), 2u);

  // NULL is missing, not the text "NULL"; the bad date is dropped.
  for (NodeId id : r.graph.NodesWithLabel("Person")) {
    const PropertyValue* born = r.graph.property(ElementRef::Node(id), "born");
    if (born) {
      EXPECT_EQ(born->type(), ValueType::kDate);
    }
  }
  EXPECT_EQ(r.graph.KeyCount("born"), 1u);
}

TEST(Ingest, ResultIsDeterministic) {
  TempDir dir;
  dir.Write("people.csv", "pid,name,born,city\n1,Ann,,OSL\n2,Bob,,OSL\n");
  dir.Write("cities.csv", "code\nOSL\n");
  std::string a = DumpToString(LoadCsvGraph(SmallMapping(), dir.path()).graph);
  std::string b = DumpToString(LoadCsvGraph(SmallMapping(), dir.path()).graph);
  EXPECT_EQ(a, b);
}

TEST(Ingest, MissingFilesAndColumnsAreErrors) {
  TempDir dir;
  dir.Write("cities.csv", "code\nOSL\n");
  try {
    LoadCsvGraph(SmallMapping(), dir.path());
    FAIL();
  } catch (const IngestError& e) {
    EXPECT_EQ(e.code(), IngestError::Code::kMissingFile);
  }
  dir.Write("people.csv", "pid,name,city\n1,Ann,OSL\n");
  try {
    LoadCsvGraph(SmallMapping(), dir.path());
    FAIL();
  } catch (const IngestError& e) {
    EXPECT_EQ(e.code(), IngestError::Code::kUnknownColumn);
  }
}

TEST(Ingest, MappingValidation) {
  nlohmann::json j = nlohmann::json::parse(R"({"nodes": [], "edges": [
    {"file": "x.csv", "label": "R", "source": {"label": "A", "column": "a"},
     "target": {"label": "B", "column": "b"}, "properties": {}}]})");
  EXPECT_THROW(MappingSpec::FromJson(j), IngestError);
  EXPECT_THROW(MappingSpec::FromJson({{"nodes", 1}}), IngestError);
}

TEST(Ingest, NorthwindMatchesCountingOracle) {
  nlohmann::json golden = testing::Golden("northwind_counts.json");
  fs::path dir = testing::DataDir() / "northwind";
  IngestResult r = LoadCsvGraph(MappingSpec::Load(dir / "mapping.json"), dir);
  EXPECT_EQ(r.graph.node_count(), golden.at("nodes").get<size_t>());
  EXPECT_EQ(r.graph.edge_count(), golden.at("edge_total").get<size_t>());
}

}  // namespace
}  // namespace traitnorm
