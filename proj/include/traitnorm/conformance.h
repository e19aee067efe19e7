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

// Structural checks on a graph.
//
// Trait normal form has three groups: canonicality (one trait node per
// distinct tuple, no orphan traits), atomicity (trait nodes hold only their
// family's scalar components), exclusivity (no in-scope element still embeds
// a family key; only property-free HAS_TRAIT edges touch trait nodes).

#ifndef TRAITNORM_CONFORMANCE_H_
#define TRAITNORM_CONFORMANCE_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "traitnorm/catalog.h"
#include "traitnorm/graph.h"

namespace traitnorm {

enum class ConditionGroup { kCanonicality, kAtomicity, kExclusivity };

std::string_view ConditionGroupName(ConditionGroup group);

struct Finding {
  ConditionGroup group;
  std::vector<ElementRef> elements;
  std::string detail;
};

struct ConformanceReport {
  std::vector<Finding> findings;

  bool conforming() const { return findings.empty(); }
  size_t Count(ConditionGroup group) const;
  // At most `limit` findings per group are listed; counts are always complete.
  nlohmann::json ToJson(size_t limit = 100) const;
};

// Findings sorted by group, then element.
ConformanceReport CheckTraitNormalForm(const PropertyGraph& graph,
                                       const std::vector<TraitFamily>& families);

struct AtomicityFinding {
  ElementRef element;
  std::string key;
  std::string delimiter;
};

// Text values that split on some delimiter into two or more non-blank parts.
// One finding per property instance.
std::vector<AtomicityFinding> CheckValueAtomicity(const PropertyGraph& graph,
                                                  const std::vector<std::string>& delimiters);

}  // namespace traitnorm

#endif  // TRAITNORM_CONFORMANCE_H_
