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

// Seeded synthetic graphs.

#ifndef TRAITNORM_SYNTH_H_
#define TRAITNORM_SYNTH_H_

#include <cstdint>
#include <random>
#include <vector>

#include "traitnorm/catalog.h"
#include "traitnorm/graph.h"

namespace traitnorm {

// Entity nodes spread over `labels` labels with a chain of edges between
// them. Every element carries `keys` metadata keys, each drawn from
// `distinct` values; keys are grouped into families of `family_arity`.
struct SyntheticSpec {
  uint64_t seed = 1;
  size_t nodes = 1000;
  size_t labels = 4;
  size_t edges_per_node = 1;
  size_t keys = 4;
  size_t distinct = 16;
  size_t family_arity = 2;
  // Fraction of metadata cells left empty.
  double missing = 0.0;
  // Also put metadata on edges.
  bool edge_metadata = false;
};

struct SyntheticGraph {
  PropertyGraph graph;
  std::vector<TraitFamily> families;
};

SyntheticGraph GenerateSynthetic(const SyntheticSpec& spec);

// Small irregular graph for property tests: up to `max_elements` nodes and
// edges, up to `max_keys` keys with small value domains of mixed types,
// random gaps. Families cover a random subset of keys, sometimes scoped to a
// label.
SyntheticGraph RandomGraph(std::mt19937_64& rng, size_t max_elements = 100, size_t max_keys = 8);

}  // namespace traitnorm

#endif  // TRAITNORM_SYNTH_H_
