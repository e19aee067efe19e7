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

// CSV to property graph loading through a declarative mapping.

#ifndef TRAITNORM_INGEST_H_
#define TRAITNORM_INGEST_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "traitnorm/graph.h"

namespace traitnorm {

// RFC 4180: comma separated, double-quote quoting with "" escapes, CRLF or
// LF line ends, header row required. A UTF-8 BOM is dropped.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<size_t> lines;  // 1-based line where each row starts

  // Index of `column` in the header, or -1.
  int Column(std::string_view column) const;
};

// Throws IngestError(kCsvSyntax) with the source name and line.
CsvTable ParseCsv(std::string_view text, const std::string& source = "<csv>");
// Throws IngestError(kMissingFile).
CsvTable ReadCsv(const std::filesystem::path& path);

// Column name -> declared type. Columns become properties of the same name.
using ColumnTypes = std::map<std::string, ValueType>;

struct NodeMapping {
  std::string file;
  std::string label;
  std::string id_column;
  ColumnTypes properties;
};

struct EndpointLookup {
  std::string label;
  std::string column;
};

struct EdgeMapping {
  std::string file;
  std::string label;
  EndpointLookup source;
  EndpointLookup target;
  ColumnTypes properties;
};

struct MappingSpec {
  std::vector<NodeMapping> nodes;
  std::vector<EdgeMapping> edges;
  // Cell texts treated as missing values.
  std::set<std::string> null_values = {""};

  // Every edge endpoint label must be produced by a node mapping, and a
  // label by one node mapping only. Throws IngestError(kMapping).
  void Validate() const;
  static MappingSpec FromJson(const nlohmann::json& j);
  static MappingSpec Load(const std::filesystem::path& path);
};

struct SkippedRow {
  size_t line = 0;
  std::string reason;
};

struct CoercionFailure {
  size_t line = 0;
  std::string column;
  std::string value;
  ValueType type = ValueType::kText;
};

struct FileReport {
  std::string file;
  std::string kind;  // "nodes" or "edges"
  std::string label;
  size_t rows = 0;
  size_t created = 0;
  std::vector<SkippedRow> skipped;
  std::vector<CoercionFailure> coercion_failures;
};

struct IngestReport {
  std::vector<FileReport> files;  // mapping order: node files, then edge files
  size_t nodes = 0;
  size_t edges = 0;

  nlohmann::json ToJson() const;
  std::string ToText() const;
};

struct IngestResult {
  PropertyGraph graph;
  IngestReport report;
};

// Files are parsed in parallel, then inserted sequentially in mapping order,
// so ids are deterministic. Rows with an empty or duplicate id, and edge
// rows whose endpoint is unknown, are skipped and reported. Throws
// IngestError for a missing file or unknown column.
IngestResult LoadCsvGraph(const MappingSpec& mapping, const std::filesystem::path& data_dir);

}  // namespace traitnorm

#endif  // TRAITNORM_INGEST_H_
