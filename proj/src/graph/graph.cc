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

#include "traitnorm/graph.h"

#include "traitnorm/error.h"

namespace traitnorm {
namespace {

using Code = GraphError::Code;

const std::set<NodeId>& EmptyNodeSet() {
  static const std::set<NodeId> kEmpty;
  return kEmpty;
}

template <typename Index, typename Id>
void Unindex(Index& index, const std::string& key, const Id& id) {
  auto it = index.find(key);
  if (it == index.end()) return;
  it->second.erase(id);
  if (it->second.empty()) index.erase(it);
}

}  // namespace

std::string ElementRef::ToString() const {
  return (is_node() ? "node:" : "edge:") + std::to_string(id);
}

void PropertyGraph::CheckLabels(const LabelSet& labels, WriteMode mode) const {
  if (labels.empty()) throw GraphError(Code::kEmptyLabels, "node needs at least one label");
  for (const auto& l : labels) {
    if (l.empty()) throw GraphError(Code::kEmptyLabels, "empty label");
  }
  if (mode != WriteMode::kPrivileged && labels.count(kTraitLabel) != 0) {
    throw GraphError(Code::kReservedLabel,
                     "label 'Trait' is reserved for normalizer-created trait nodes");
  }
}

void PropertyGraph::IndexNode(NodeId id, const Node& n) {
  for (const auto& l : n.labels) node_label_index_[l].insert(id);
  for (const auto& [k, v] : n.props) key_index_[k].insert(ElementRef::Node(id));
  property_count_ += n.props.size();
}

void PropertyGraph::IndexEdge(EdgeId id, const Edge& e) {
  edge_label_index_[e.label].insert(id);
  for (const auto& [k, v] : e.props) key_index_[k].insert(ElementRef::Edge(id));
  property_count_ += e.props.size();
}

void PropertyGraph::LinkEdge(EdgeId id, const Edge& e) {
  if (e.src.is_node()) {
    mutable_node(e.src.id).out.insert(id);
  } else {
    mutable_edge(e.src.id).out.insert(id);
  }
  mutable_node(e.dst).in.insert(id);
}

NodeId PropertyGraph::CreateNode(LabelSet labels, PropertyMap props, WriteMode mode) {
  CheckLabels(labels, mode);
  NodeId id = nodes_.size();
  nodes_.emplace_back(Node{std::move(labels), std::move(props), {}, {}});
  IndexNode(id, *nodes_.back());
  ++node_count_;
  return id;
}

EdgeId PropertyGraph::CreateEdge(ElementRef src, NodeId dst, std::string label,
                                 PropertyMap props) {
  if (label.empty()) throw GraphError(Code::kEmptyLabels, "edge needs a label");
  if (!Contains(src)) {
    throw GraphError(Code::kDanglingEndpoint, "edge source " + src.ToString() + " not found");
  }
  if (!HasNode(dst)) {
    throw GraphError(Code::kDanglingEndpoint,
                     "edge target node:" + std::to_string(dst) + " not found");
  }
  if (src.is_edge() && label != kHasTraitLabel) {
    throw GraphError(Code::kDanglingEndpoint, "only HAS_TRAIT edges may start at an edge");
  }
  EdgeId id = edges_.size();
  edges_.emplace_back(Edge{src, dst, std::move(label), std::move(props), {}});
  const Edge& e = *edges_.back();
  IndexEdge(id, e);
  LinkEdge(id, e);
  ++edge_count_;
  return id;
}

void PropertyGraph::RestoreNode(NodeId id, LabelSet labels, PropertyMap props) {
  if (id < nodes_.size()) {
    throw GraphError(Code::kInvalidId, "node id " + std::to_string(id) + " already allocated");
  }
  CheckLabels(labels, WriteMode::kPrivileged);
  nodes_.resize(id);
  nodes_.emplace_back(Node{std::move(labels), std::move(props), {}, {}});
  IndexNode(id, *nodes_.back());
  ++node_count_;
}

void PropertyGraph::RestoreEdge(EdgeId id, ElementRef src, NodeId dst, std::string label,
                                PropertyMap props) {
  if (id < edges_.size()) {
    throw GraphError(Code::kInvalidId, "edge id " + std::to_string(id) + " already allocated");
  }
  if (label.empty()) throw GraphError(Code::kEmptyLabels, "edge needs a label");
  // Edge-sourced edges may reference edges restored earlier only.
  if (!Contains(src) || !HasNode(dst)) {
    throw GraphError(Code::kDanglingEndpoint,
                     "edge " + std::to_string(id) + " has a dangling endpoint");
  }
  if (src.is_edge() && label != kHasTraitLabel) {
    throw GraphError(Code::kDanglingEndpoint, "only HAS_TRAIT edges may start at an edge");
  }
  edges_.resize(id);
  edges_.emplace_back(Edge{src, dst, std::move(label), std::move(props), {}});
  const Edge& e = *edges_.back();
  IndexEdge(id, e);
  LinkEdge(id, e);
  ++edge_count_;
}

void PropertyGraph::ReserveIds(NodeId next_node, EdgeId next_edge) {
  if (next_node > nodes_.size()) nodes_.resize(next_node);
  if (next_edge > edges_.size()) edges_.resize(next_edge);
}

bool PropertyGraph::Contains(ElementRef element) const {
  return element.is_node() ? HasNode(element.id) : HasEdge(element.id);
}

const Node& PropertyGraph::node(NodeId id) const {
  if (!HasNode(id)) throw GraphError(Code::kUnknownElement, "node:" + std::to_string(id));
  return *nodes_[id];
}

const Edge& PropertyGraph::edge(EdgeId id) const {
  if (!HasEdge(id)) throw GraphError(Code::kUnknownElement, "edge:" + std::to_string(id));
  return *edges_[id];
}

Node& PropertyGraph::mutable_node(NodeId id) {
  if (!HasNode(id)) throw GraphError(Code::kUnknownElement, "node:" + std::to_string(id));
  return *nodes_[id];
}

Edge& PropertyGraph::mutable_edge(EdgeId id) {
  if (!HasEdge(id)) throw GraphError(Code::kUnknownElement, "edge:" + std::to_string(id));
  return *edges_[id];
}

const PropertyMap& PropertyGraph::properties(ElementRef element) const {
  return element.is_node() ? node(element.id).props : edge(element.id).props;
}

PropertyMap& PropertyGraph::mutable_properties(ElementRef element) {
  return element.is_node() ? mutable_node(element.id).props : mutable_edge(element.id).props;
}

const PropertyValue* PropertyGraph::property(ElementRef element, std::string_view key) const {
  const PropertyMap& props = properties(element);
  auto it = props.find(key);
  return it == props.end() ? nullptr : &it->second;
}

void PropertyGraph::SetProperty(ElementRef element, std::string key, PropertyValue value) {
  PropertyMap& props = mutable_properties(element);
  auto [it, inserted] = props.insert_or_assign(std::move(key), std::move(value));
  if (inserted) {
    key_index_[it->first].insert(element);
    ++property_count_;
  }
}

std::optional<PropertyValue> PropertyGraph::RemoveProperty(ElementRef element,
                                                           std::string_view key) {
  PropertyMap& props = mutable_properties(element);
  auto it = props.find(key);
  if (it == props.end()) return std::nullopt;
  PropertyValue prior = std::move(it->second);
  Unindex(key_index_, it->first, element);
  props.erase(it);
  --property_count_;
  return prior;
}

void PropertyGraph::RemoveEdge(EdgeId id) {
  const Edge& e = edge(id);
  if (!e.out.empty()) {
    throw GraphError(Code::kIncidentEdges,
                     "edge:" + std::to_string(id) + " still has HAS_TRAIT edges attached");
  }
  if (e.src.is_node()) {
    mutable_node(e.src.id).out.erase(id);
  } else {
    mutable_edge(e.src.id).out.erase(id);
  }
  mutable_node(e.dst).in.erase(id);
  Unindex(edge_label_index_, e.label, id);
  for (const auto& [k, v] : e.props) Unindex(key_index_, k, ElementRef::Edge(id));
  property_count_ -= e.props.size();
  edges_[id].reset();
  --edge_count_;
}

void PropertyGraph::RemoveNode(NodeId id) {
  const Node& n = node(id);
  if (!n.out.empty() || !n.in.empty()) {
    throw GraphError(Code::kIncidentEdges,
                     "node:" + std::to_string(id) + " has incident edges; delete them first");
  }
  for (const auto& l : n.labels) Unindex(node_label_index_, l, id);
  for (const auto& [k, v] : n.props) Unindex(key_index_, k, ElementRef::Node(id));
  property_count_ -= n.props.size();
  nodes_[id].reset();
  --node_count_;
}

std::vector<KeyedValue> PropertyGraph::ElementsWithKey(std::string_view key) const {
  std::vector<KeyedValue> out;
  auto it = key_index_.find(key);
  if (it == key_index_.end()) return out;
  out.reserve(it->second.size());
  for (const ElementRef& e : it->second) {
    const PropertyMap& props = properties(e);
    out.push_back({e, &props.find(key)->second});
  }
  return out;
}

size_t PropertyGraph::KeyCount(std::string_view key) const {
  auto it = key_index_.find(key);
  return it == key_index_.end() ? 0 : it->second.size();
}

std::vector<std::string> PropertyGraph::Keys() const {
  std::vector<std::string> out;
  out.reserve(key_index_.size());
  for (const auto& [k, v] : key_index_) out.push_back(k);
  return out;
}

const std::set<NodeId>& PropertyGraph::NodesWithLabel(std::string_view label) const {
  auto it = node_label_index_.find(label);
  return it == node_label_index_.end() ? EmptyNodeSet() : it->second;
}

const std::set<EdgeId>& PropertyGraph::EdgesWithLabel(std::string_view label) const {
  auto it = edge_label_index_.find(label);
  return it == edge_label_index_.end() ? EmptyNodeSet() : it->second;
}

std::vector<std::string> PropertyGraph::NodeLabels() const {
  std::vector<std::string> out;
  for (const auto& [l, ids] : node_label_index_) out.push_back(l);
  return out;
}

std::vector<std::string> PropertyGraph::EdgeLabels() const {
  std::vector<std::string> out;
  for (const auto& [l, ids] : edge_label_index_) out.push_back(l);
  return out;
}

std::vector<NodeId> PropertyGraph::NodeIds() const {
  std::vector<NodeId> out;
  out.reserve(node_count_);
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i]) out.push_back(i);
  }
  return out;
}

std::vector<EdgeId> PropertyGraph::EdgeIds() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count_);
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    if (edges_[i]) out.push_back(i);
  }
  return out;
}

const std::set<EdgeId>& PropertyGraph::OutEdges(ElementRef element) const {
  return element.is_node() ? node(element.id).out : edge(element.id).out;
}

const std::set<EdgeId>& PropertyGraph::InEdges(NodeId id) const { return node(id).in; }

size_t PropertyGraph::Degree(NodeId id) const {
  const Node& n = node(id);
  return n.out.size() + n.in.size();
}

bool PropertyGraph::IndexesConsistent() const {
  std::map<std::string, std::set<NodeId>, std::less<>> node_labels;
  std::map<std::string, std::set<EdgeId>, std::less<>> edge_labels;
  std::map<std::string, std::set<ElementRef>, std::less<>> keys;
  size_t props = 0, nodes = 0, edges = 0;
  std::vector<std::set<EdgeId>> node_out(nodes_.size()), node_in(nodes_.size());
  std::vector<std::set<EdgeId>> edge_out(edges_.size());
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i]) continue;
    ++nodes;
    for (const auto& l : nodes_[i]->labels) node_labels[l].insert(i);
    for (const auto& [k, v] : nodes_[i]->props) keys[k].insert(ElementRef::Node(i));
    props += nodes_[i]->props.size();
  }
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    if (!edges_[i]) continue;
    const Edge& e = *edges_[i];
    ++edges;
    if (!Contains(e.src) || !HasNode(e.dst)) return false;
    edge_labels[e.label].insert(i);
    for (const auto& [k, v] : e.props) keys[k].insert(ElementRef::Edge(i));
    props += e.props.size();
    (e.src.is_node() ? node_out[e.src.id] : edge_out[e.src.id]).insert(i);
    node_in[e.dst].insert(i);
  }
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] && (nodes_[i]->out != node_out[i] || nodes_[i]->in != node_in[i])) {
      return false;
    }
  }
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    if (edges_[i] && edges_[i]->out != edge_out[i]) return false;
  }
  return nodes == node_count_ && edges == edge_count_ && props == property_count_ &&
         node_labels == node_label_index_ && edge_labels == edge_label_index_ &&
         keys == key_index_;
}

bool SameContent(const PropertyGraph& a, const PropertyGraph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  for (NodeId id : a.NodeIds()) {
    if (!b.HasNode(id)) return false;
    const Node& x = a.node(id);
    const Node& y = b.node(id);
    if (x.labels != y.labels || x.props != y.props) return false;
  }
  for (EdgeId id : a.EdgeIds()) {
    if (!b.HasEdge(id)) return false;
    const Edge& x = a.edge(id);
    const Edge& y = b.edge(id);
    if (x.src != y.src || x.dst != y.dst || x.label != y.label || x.props != y.props) {
      return false;
    }
  }
  return true;
}

}  // namespace traitnorm
