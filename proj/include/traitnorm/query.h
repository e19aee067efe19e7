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

// Instrumented pattern queries.
//
// Plans are operator trees written by hand. Execution counts storage
// accesses: one per label-index probe, one per node fetch, one per edge
// fetch, one per property read. Label checks on an already fetched node are
// free.
//
// Plan syntax (s-expressions, ';' comments):
//
//   (scan v Label)
//   (filter PLAN (= v.key "text") (= a.key b.key) ...)
//   (expand PLAN from -> EDGE_LABEL to [Label])      ; or <- for incoming
//   (join PLAN PLAN (= a.key b.key) ...)             ; hash join
//   (product PLAN PLAN)                              ; cartesian product
//   (project PLAN v.key ...)
//   (aggregate PLAN (group v.key ...) (count))       ; or (collect v.key)
//
// Literals are "strings", integers, decimals, true and false. A bare
// variable compares element identity.

#ifndef TRAITNORM_QUERY_H_
#define TRAITNORM_QUERY_H_

#include <chrono>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "traitnorm/graph.h"

namespace traitnorm {

struct PropertyRef {
  std::string var;
  std::optional<std::string> key;  // nullopt: the bound element itself

  std::string ToString() const { return key ? var + "." + *key : var; }
};

struct Condition {
  PropertyRef lhs;
  std::variant<PropertyRef, PropertyValue> rhs;
};

struct PlanNode {
  enum class Kind { kScan, kFilter, kExpand, kJoin, kProduct, kProject, kAggregate };
  Kind kind = Kind::kScan;
  std::vector<std::shared_ptr<const PlanNode>> inputs;

  std::string var;    // scan: bound variable; expand: source variable
  std::string label;  // scan: node label; expand: edge label
  std::string to;     // expand: bound variable
  bool outgoing = true;
  std::optional<std::string> target_label;
  std::vector<Condition> conditions;  // filter, join (equalities)
  std::vector<PropertyRef> columns;   // project columns, aggregate group keys
  std::optional<PropertyRef> collect;  // aggregate: nullopt means count
};

using PlanPtr = std::shared_ptr<const PlanNode>;

// Throws QueryError with the offending position.
PlanPtr ParsePlan(std::string_view text);
std::string FormatPlan(const PlanNode& plan);

struct OperatorTrace {
  std::string op;
  size_t rows = 0;
  size_t accesses = 0;
};

struct QueryStats {
  size_t rows = 0;
  size_t accesses = 0;
  std::chrono::nanoseconds wall{0};
  std::vector<OperatorTrace> trace;  // post-order
  bool cartesian = false;
};

// Total order on JSON values: by type, then numerically, lexicographically
// for strings and arrays, and by serialized form otherwise.
struct JsonLess {
  bool operator()(const nlohmann::json& a, const nlohmann::json& b) const;
};

struct QueryResult {
  // Each row is a JSON array; rows sorted so equal multisets compare equal.
  std::vector<nlohmann::json> rows;
  QueryStats stats;
};

struct ExecuteOptions {
  // Reject labels and keys absent from the graph before running.
  bool validate = true;
};

// Throws QueryError for unbound variables, duplicate bindings, project or
// aggregate below the root, and (with validate) unknown labels or keys.
QueryResult Execute(const PlanNode& plan, const PropertyGraph& graph,
                    const ExecuteOptions& options = {});

struct WorkloadTest {
  std::string name;
  std::string purpose;
  std::set<std::string> flags;  // e.g. "access-trend-undefined"
  PlanPtr embedded;             // runs on the pre-normalization graph
  PlanPtr trait;                // runs on the normalized graph
};

// (test NAME "purpose" [(flags f ...)] (embedded PLAN) (trait PLAN)) ...
std::vector<WorkloadTest> ParseWorkload(std::string_view text);
std::vector<WorkloadTest> LoadWorkload(const std::string& path);

struct WorkloadRow {
  std::string name;
  std::string purpose;
  std::set<std::string> flags;
  QueryResult pre;
  QueryResult post;
  double access_ratio = 0.0;  // pre accesses / post accesses
  double time_ratio = 0.0;
  bool equivalent = false;    // identical result multisets
};

std::vector<WorkloadRow> RunWorkload(const std::vector<WorkloadTest>& tests,
                                     const PropertyGraph& pre, const PropertyGraph& post);

// `with_time` false drops wall-time fields so output is byte-reproducible.
nlohmann::json WorkloadJson(const std::vector<WorkloadRow>& rows, bool with_time = true);
std::string WorkloadText(const std::vector<WorkloadRow>& rows, bool with_time = true);

}  // namespace traitnorm

#endif  // TRAITNORM_QUERY_H_
