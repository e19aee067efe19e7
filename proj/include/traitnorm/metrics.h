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

// Redundancy and size measures over a graph state.

#ifndef TRAITNORM_METRICS_H_
#define TRAITNORM_METRICS_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "traitnorm/catalog.h"
#include "traitnorm/graph.h"

namespace traitnorm {

struct KeyUsage {
  std::string family;
  std::string key;
  size_t occurrences = 0;
  size_t distinct_values = 0;

  friend bool operator==(const KeyUsage&, const KeyUsage&) = default;
};

struct MetricsReport {
  std::vector<std::string> scope;  // family names measured
  // Embedded property instances of family keys on in-scope domain elements.
  size_t embedded_occurrences = 0;
  // Distinct (family, value tuple) pairs among those elements.
  size_t distinct_tuples = 0;
  // embedded_occurrences / distinct_tuples; 1.0 when nothing is embedded.
  double mrr_embedded = 1.0;

  size_t trait_nodes = 0;
  size_t trait_links = 0;
  size_t trait_properties = 0;
  // trait_links / trait_nodes; 0 without trait nodes.
  double trait_reuse_ratio = 0.0;

  size_t nodes = 0;
  size_t edges = 0;
  size_t properties = 0;
  size_t scm = 0;  // nodes + edges + properties

  std::vector<KeyUsage> per_key;  // by family order, then key order

  nlohmann::json ToJson() const;
};

// Parallel across families and keys.
MetricsReport Measure(const PropertyGraph& graph, const std::vector<TraitFamily>& families);
// One pass over every element; reference for the parallel kernel.
MetricsReport MeasureSerial(const PropertyGraph& graph, const std::vector<TraitFamily>& families);

// occurrences / distinct tuples over `families` (1.0 when nothing is
// embedded).
double MetadataReuseRatio(const PropertyGraph& graph, const std::vector<TraitFamily>& families);
size_t SchemaComplexity(const PropertyGraph& graph);

struct RedundancyRemoval {
  // Duplicate instances beyond the first per distinct tuple, before.
  size_t duplicates = 0;
  // Embedded instances that disappeared between the two states.
  size_t removed = 0;
  size_t ledger = 0;
  // removed == ledger.
  bool reconciled = false;
};

// Throws Error when the two reports measure different family scopes.
RedundancyRemoval RedundancyRemoved(const MetricsReport& pre, const MetricsReport& post,
                                    size_t ledger_entries);

struct AblationRow {
  std::string state;
  MetricsReport metrics;
};

nlohmann::json AblationJson(const std::vector<AblationRow>& rows);
std::string AblationText(const std::vector<AblationRow>& rows);

}  // namespace traitnorm

#endif  // TRAITNORM_METRICS_H_
