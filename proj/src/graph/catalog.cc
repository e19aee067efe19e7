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

#include "traitnorm/catalog.h"

#include <set>

#include "traitnorm/error.h"

namespace traitnorm {

bool TraitFamily::InScope(const PropertyGraph& graph, ElementRef element) const {
  if (scope.empty()) return true;
  if (element.is_node()) {
    for (const auto& l : graph.node(element.id).labels) {
      if (scope.count(l)) return true;
    }
    return false;
  }
  return scope.count(graph.edge(element.id).label) != 0;
}

void ValidateFamily(const TraitFamily& family) {
  using Code = NormalizeError::Code;
  if (family.name.empty()) throw NormalizeError(Code::kConfig, "trait family without a name");
  if (family.name == kTraitLabel) {
    throw NormalizeError(Code::kConfig, "family name 'Trait' is reserved");
  }
  if (family.keys.empty()) {
    throw NormalizeError(Code::kConfig, "family " + family.name + " declares no keys");
  }
  std::set<std::string_view> seen;
  for (const auto& k : family.keys) {
    if (k.empty() || k == kFamilyKey) {
      throw NormalizeError(Code::kConfig,
                           "family " + family.name + " uses an empty or reserved key");
    }
    if (!seen.insert(k).second) {
      throw NormalizeError(Code::kConfig,
                           "family " + family.name + " lists key '" + k + "' twice");
    }
  }
}

std::optional<ValueTuple> EmbeddedTuple(const PropertyGraph& graph, ElementRef element,
                                        const TraitFamily& family) {
  const PropertyMap& props = graph.properties(element);
  ValueTuple tuple(family.keys.size());
  bool any = false;
  for (size_t i = 0; i < family.keys.size(); ++i) {
    auto it = props.find(family.keys[i]);
    if (it != props.end()) {
      tuple[i] = it->second;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return tuple;
}

std::string CanonicalTraitKey(std::string_view family, const ValueTuple& tuple) {
  nlohmann::json j = nlohmann::json::array();
  j.push_back(family);
  for (const auto& v : tuple) j.push_back(v ? v->ToJson() : nlohmann::json(nullptr));
  return j.dump();
}

std::string RenderTuple(const TraitFamily& family, const ValueTuple& tuple) {
  std::string out = family.name + "(";
  bool first = true;
  for (size_t i = 0; i < family.keys.size() && i < tuple.size(); ++i) {
    if (!tuple[i]) continue;
    if (!first) out += ", ";
    out += family.keys[i] + "=" + tuple[i]->ToString();
    first = false;
  }
  return out + ")";
}

bool IsTraitNode(const PropertyGraph& graph, NodeId id) {
  return graph.node(id).has_label(kTraitLabel);
}

bool IsDomainElement(const PropertyGraph& graph, ElementRef element) {
  if (element.is_node()) return !IsTraitNode(graph, element.id);
  return graph.edge(element.id).label != kHasTraitLabel;
}

bool TraitCatalog::Insert(const std::string& family, ValueTuple tuple, NodeId node) {
  if (by_node_.count(node)) return false;
  auto [it, inserted] = by_value_.emplace(std::make_pair(family, tuple), node);
  if (!inserted) return false;
  by_node_.emplace(node, TraitEntry{family, std::move(tuple)});
  return true;
}

std::optional<NodeId> TraitCatalog::Find(const std::string& family,
                                         const ValueTuple& tuple) const {
  auto it = by_value_.find(std::make_pair(family, tuple));
  if (it == by_value_.end()) return std::nullopt;
  return it->second;
}

const TraitEntry* TraitCatalog::Lookup(NodeId node) const {
  auto it = by_node_.find(node);
  return it == by_node_.end() ? nullptr : &it->second;
}

size_t TraitCatalog::CountFamily(const std::string& family) const {
  size_t n = 0;
  for (const auto& [id, entry] : by_node_) n += entry.family == family;
  return n;
}

ValueTuple TupleOfTraitNode(const PropertyGraph& graph, NodeId node,
                            const TraitFamily& family) {
  const PropertyMap& props = graph.node(node).props;
  ValueTuple tuple(family.keys.size());
  for (size_t i = 0; i < family.keys.size(); ++i) {
    auto it = props.find(family.keys[i]);
    if (it != props.end()) tuple[i] = it->second;
  }
  return tuple;
}

TraitCatalog TraitCatalog::FromGraph(const PropertyGraph& graph,
                                     const std::vector<TraitFamily>& families,
                                     std::vector<NodeId>* duplicates) {
  TraitCatalog catalog;
  for (const TraitFamily& family : families) {
    for (NodeId id : graph.NodesWithLabel(family.label())) {
      const Node& n = graph.node(id);
      if (!n.has_label(kTraitLabel)) continue;
      auto fam = n.props.find(kFamilyKey);
      if (fam == n.props.end() || !fam->second.is_text() || fam->second.as_text() != family.name) {
        continue;
      }
      if (!catalog.Insert(family.name, TupleOfTraitNode(graph, id, family), id) && duplicates) {
        duplicates->push_back(id);
      }
    }
  }
  return catalog;
}

}  // namespace traitnorm
