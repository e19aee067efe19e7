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

#ifndef TRAITNORM_CATALOG_H_
#define TRAITNORM_CATALOG_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "traitnorm/graph.h"

namespace traitnorm {

// Property holding the family name on every trait node.
inline constexpr std::string_view kFamilyKey = "family";

// A named group of property keys extracted together into one class of trait
// nodes. `scope` restricts which elements are considered: node labels and
// edge labels both match; empty means any element.
struct TraitFamily {
  std::string name;
  std::vector<std::string> keys;
  LabelSet scope;

  // Label carried by this family's trait nodes besides `Trait`.
  const std::string& label() const { return name; }
  bool InScope(const PropertyGraph& graph, ElementRef element) const;
};

// Validates name, non-empty duplicate-free keys, no reserved key. Throws
// NormalizeError(kConfig).
void ValidateFamily(const TraitFamily& family);

// Component values aligned with TraitFamily::keys; nullopt = key absent.
using ValueTuple = std::vector<std::optional<PropertyValue>>;

// The tuple `element` embeds for `family`, or nullopt if it carries none of
// the family's keys.
std::optional<ValueTuple> EmbeddedTuple(const PropertyGraph& graph, ElementRef element,
                                        const TraitFamily& family);

// Stable text encoding of (family, tuple); equal iff both parts are equal.
std::string CanonicalTraitKey(std::string_view family, const ValueTuple& tuple);
std::string RenderTuple(const TraitFamily& family, const ValueTuple& tuple);

// Domain elements are everything except trait nodes and HAS_TRAIT edges.
bool IsTraitNode(const PropertyGraph& graph, NodeId id);
bool IsDomainElement(const PropertyGraph& graph, ElementRef element);

struct TraitEntry {
  std::string family;
  ValueTuple tuple;
};

// Canonical registry: (family, value tuple) <-> trait node id. Insert
// rejects a second node for an existing pair, so the mapping stays a
// bijection.
class TraitCatalog {
 public:
  // Returns false if the pair or the node is already registered.
  bool Insert(const std::string& family, ValueTuple tuple, NodeId node);

  std::optional<NodeId> Find(const std::string& family, const ValueTuple& tuple) const;
  const TraitEntry* Lookup(NodeId node) const;

  size_t size() const { return by_node_.size(); }
  size_t CountFamily(const std::string& family) const;
  const std::map<NodeId, TraitEntry>& entries() const { return by_node_; }

  // Rebuilds the catalog from trait nodes already in `graph`. Trait nodes
  // whose family is not in `families` are ignored. Duplicate (family, tuple)
  // trait nodes keep the lowest id; the rest are listed in `duplicates`.
  static TraitCatalog FromGraph(const PropertyGraph& graph,
                                const std::vector<TraitFamily>& families,
                                std::vector<NodeId>* duplicates = nullptr);

 private:
  std::map<std::pair<std::string, ValueTuple>, NodeId> by_value_;
  std::map<NodeId, TraitEntry> by_node_;
};

// Reads the tuple stored on a trait node for `family`.
ValueTuple TupleOfTraitNode(const PropertyGraph& graph, NodeId node, const TraitFamily& family);

}  // namespace traitnorm

#endif  // TRAITNORM_CATALOG_H_
