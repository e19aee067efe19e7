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

#ifndef TRAITNORM_SCHEMA_H_
#define TRAITNORM_SCHEMA_H_

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "traitnorm/graph.h"

namespace traitnorm {

// Schema view of an instance: node types are label combinations, edge types
// are (source type, label, target type) triples. Edge-sourced HAS_TRAIT
// edges use the source edge's label wrapped in brackets as source type.
struct GraphSchema {
  std::set<std::string> node_types;
  std::set<std::tuple<std::string, std::string, std::string>> edge_types;
  std::map<std::string, std::set<std::string>> keys_by_type;
  std::vector<std::string> trait_families;

  // True iff every node type, edge type and key in `graph` is declared here.
  bool Covers(const PropertyGraph& graph) const;
};

// Canonical name of a node's type, labels joined with ':' in sorted order.
std::string NodeTypeName(const LabelSet& labels);

GraphSchema DeriveSchema(const PropertyGraph& graph);

}  // namespace traitnorm

#endif  // TRAITNORM_SCHEMA_H_
