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

#include "traitnorm/schema.h"

namespace traitnorm {

std::string NodeTypeName(const LabelSet& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ':';
    out += l;
  }
  return out;
}

GraphSchema DeriveSchema(const PropertyGraph& graph) {
  GraphSchema schema;
  std::set<std::string> families;
  for (NodeId id : graph.NodeIds()) {
    const Node& n = graph.node(id);
    std::string type = NodeTypeName(n.labels);
    schema.node_types.insert(type);
    auto& keys = schema.keys_by_type[type];
    for (const auto& [k, v] : n.props) keys.insert(k);
    if (n.has_label(kTraitLabel)) {
      auto it = n.props.find("family");
      if (it != n.props.end() && it->second.is_text()) families.insert(it->second.as_text());
    }
  }
  for (EdgeId id : graph.EdgeIds()) {
    const Edge& e = graph.edge(id);
    std::string src = e.src.is_node() ? NodeTypeName(graph.node(e.src.id).labels)
                                      : "[" + graph.edge(e.src.id).label + "]";
    schema.edge_types.emplace(src, e.label, NodeTypeName(graph.node(e.dst).labels));
    auto& keys = schema.keys_by_type["[" + e.label + "]"];
    for (const auto& [k, v] : e.props) keys.insert(k);
  }
  schema.trait_families.assign(families.begin(), families.end());
  return schema;
}

bool GraphSchema::Covers(const PropertyGraph& graph) const {
  auto declared = [&](const std::string& type, const PropertyMap& props) {
    auto it = keys_by_type.find(type);
    if (it == keys_by_type.end()) return props.empty();
    for (const auto& [k, v] : props) {
      if (!it->second.count(k)) return false;
    }
    return true;
  };
  for (NodeId id : graph.NodeIds()) {
    const Node& n = graph.node(id);
    std::string type = NodeTypeName(n.labels);
    if (!node_types.count(type) || !declared(type, n.props)) return false;
  }
  for (EdgeId id : graph.EdgeIds()) {
    const Edge& e = graph.edge(id);
    std::string src = e.src.is_node() ? NodeTypeName(graph.node(e.src.id).labels)
                                      : "[" + graph.edge(e.src.id).label + "]";
    if (!edge_types.count({src, e.label, NodeTypeName(graph.node(e.dst).labels)})) return false;
    if (!declared("[" + e.label + "]", e.props)) return false;
  }
  return true;
}

}  // namespace traitnorm
