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

#ifndef TRAITNORM_GRAPH_H_
#define TRAITNORM_GRAPH_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "traitnorm/value.h"

namespace traitnorm {

using NodeId = uint64_t;
using EdgeId = uint64_t;

inline constexpr std::string_view kTraitLabel = "Trait";
inline constexpr std::string_view kHasTraitLabel = "HAS_TRAIT";

enum class ElementKind : uint8_t { kNode, kEdge };

// Identifies a node or an edge. Orders nodes before edges, then by id.
struct ElementRef {
  ElementKind kind = ElementKind::kNode;
  uint64_t id = 0;

  static ElementRef Node(NodeId id) { return {ElementKind::kNode, id}; }
  static ElementRef Edge(EdgeId id) { return {ElementKind::kEdge, id}; }
  bool is_node() const { return kind == ElementKind::kNode; }
  bool is_edge() const { return kind == ElementKind::kEdge; }
  std::string ToString() const;

  friend auto operator<=>(const ElementRef&, const ElementRef&) = default;
};

using LabelSet = std::set<std::string, std::less<>>;

// Writes of the reserved `Trait` label need kPrivileged. Only the normalizer
// and the dump loader use it.
enum class WriteMode { kUser, kPrivileged };

struct Node {
  LabelSet labels;
  PropertyMap props;
  std::set<EdgeId> out;
  std::set<EdgeId> in;

  bool has_label(std::string_view label) const { return labels.find(label) != labels.end(); }
};

// `src` is a node for ordinary edges. A HAS_TRAIT edge may also start at an
// edge, which is how edge properties get linked to traits; `dst` is always a
// node.
struct Edge {
  ElementRef src;
  NodeId dst = 0;
  std::string label;
  PropertyMap props;
  std::set<EdgeId> out;  // HAS_TRAIT edges whose source is this edge
};

struct KeyedValue {
  ElementRef element;
  const PropertyValue* value;
};

// Mutable labeled property graph with label and property-key indexes.
//
// Ids are dense per graph and never reused. The indexes are kept exactly in
// sync with element state by every mutation. Deleting a node or edge that
// still has incident edges is rejected.
//
// Single writer: callers must not mutate concurrently with any other access.
// Const access from several threads is safe.
class PropertyGraph {
 public:
  PropertyGraph() = default;

  NodeId CreateNode(LabelSet labels, PropertyMap props = {},
                    WriteMode mode = WriteMode::kUser);
  EdgeId CreateEdge(ElementRef src, NodeId dst, std::string label, PropertyMap props = {});
  EdgeId CreateEdge(NodeId src, NodeId dst, std::string label, PropertyMap props = {}) {
    return CreateEdge(ElementRef::Node(src), dst, std::move(label), std::move(props));
  }

  void SetProperty(ElementRef element, std::string key, PropertyValue value);
  // Returns the prior value, or nullopt if the key was absent (no-op).
  std::optional<PropertyValue> RemoveProperty(ElementRef element, std::string_view key);

  void RemoveEdge(EdgeId id);
  void RemoveNode(NodeId id);

  // Inserts with an explicit id; used when reloading dumps. Ids must be
  // strictly increasing per kind and not yet allocated.
  void RestoreNode(NodeId id, LabelSet labels, PropertyMap props);
  void RestoreEdge(EdgeId id, ElementRef src, NodeId dst, std::string label, PropertyMap props);
  // Raises the allocators so later creations never reuse deleted ids.
  void ReserveIds(NodeId next_node, EdgeId next_edge);

  bool Contains(ElementRef element) const;
  bool HasNode(NodeId id) const { return id < nodes_.size() && nodes_[id].has_value(); }
  bool HasEdge(EdgeId id) const { return id < edges_.size() && edges_[id].has_value(); }

  // Throws GraphError(kUnknownElement) for missing ids.
  const Node& node(NodeId id) const;
  const Edge& edge(EdgeId id) const;
  const PropertyMap& properties(ElementRef element) const;
  const PropertyValue* property(ElementRef element, std::string_view key) const;

  // Every node and edge carrying `key`, nodes first, ascending ids.
  std::vector<KeyedValue> ElementsWithKey(std::string_view key) const;
  size_t KeyCount(std::string_view key) const;
  std::vector<std::string> Keys() const;

  const std::set<NodeId>& NodesWithLabel(std::string_view label) const;
  const std::set<EdgeId>& EdgesWithLabel(std::string_view label) const;
  std::vector<std::string> NodeLabels() const;
  std::vector<std::string> EdgeLabels() const;

  std::vector<NodeId> NodeIds() const;
  std::vector<EdgeId> EdgeIds() const;
  // Outgoing edges of a node, or HAS_TRAIT edges leaving an edge.
  const std::set<EdgeId>& OutEdges(ElementRef element) const;
  const std::set<EdgeId>& InEdges(NodeId id) const;
  size_t Degree(NodeId id) const;

  size_t node_count() const { return node_count_; }
  size_t edge_count() const { return edge_count_; }
  // Total property instances over nodes and edges.
  size_t property_count() const { return property_count_; }

  NodeId next_node_id() const { return nodes_.size(); }
  EdgeId next_edge_id() const { return edges_.size(); }

  // Recomputes every index from element state and compares. For tests and
  // debug assertions; O(size).
  bool IndexesConsistent() const;

 private:
  Node& mutable_node(NodeId id);
  Edge& mutable_edge(EdgeId id);
  PropertyMap& mutable_properties(ElementRef element);
  void CheckLabels(const LabelSet& labels, WriteMode mode) const;
  void IndexNode(NodeId id, const Node& n);
  void IndexEdge(EdgeId id, const Edge& e);
  void LinkEdge(EdgeId id, const Edge& e);

  std::vector<std::optional<Node>> nodes_;
  std::vector<std::optional<Edge>> edges_;
  size_t node_count_ = 0;
  size_t edge_count_ = 0;
  size_t property_count_ = 0;

  std::map<std::string, std::set<NodeId>, std::less<>> node_label_index_;
  std::map<std::string, std::set<EdgeId>, std::less<>> edge_label_index_;
  std::map<std::string, std::set<ElementRef>, std::less<>> key_index_;
};

// Metadata equality: same live element ids, labels, endpoints and property
// maps. Ignores allocator state.
bool SameContent(const PropertyGraph& a, const PropertyGraph& b);

}  // namespace traitnorm

#endif  // TRAITNORM_GRAPH_H_
