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

#include "traitnorm/conformance.h"

#include <algorithm>
#include <map>
#include <tuple>

namespace traitnorm {
namespace {

using nlohmann::json;

std::string FamilyOf(const Node& n) {
  auto it = n.props.find(kFamilyKey);
  if (it == n.props.end() || !it->second.is_text()) return {};
  return it->second.as_text();
}

void CheckTraitNodes(const PropertyGraph& graph, const std::vector<TraitFamily>& families,
                     std::vector<Finding>& out) {
  std::map<std::string_view, const TraitFamily*> by_name;
  for (const auto& f : families) by_name[f.name] = &f;

  std::map<std::pair<std::string, PropertyMap>, std::vector<ElementRef>> groups;
  for (NodeId id : graph.NodesWithLabel(kTraitLabel)) {
    const Node& n = graph.node(id);
    const ElementRef ref = ElementRef::Node(id);
    const std::string family = FamilyOf(n);
    PropertyMap components = n.props;
    components.erase(std::string(kFamilyKey));
    groups[{family, components}].push_back(ref);

    bool linked = false;
    for (EdgeId eid : n.in) linked |= graph.edge(eid).label == kHasTraitLabel;
    if (!linked) out.push_back({ConditionGroup::kCanonicality, {ref}, "orphan trait node"});

    if (family.empty()) {
      out.push_back({ConditionGroup::kAtomicity, {ref}, "trait node without a family name"});
      continue;
    }
    if (components.empty()) {
      out.push_back({ConditionGroup::kAtomicity, {ref}, "trait node without components"});
    }
    auto fit = by_name.find(family);
    if (fit == by_name.end()) {
      if (!families.empty()) {
        out.push_back({ConditionGroup::kAtomicity, {ref}, "unknown family " + family});
      }
      continue;
    }
    const TraitFamily& f = *fit->second;
    if (!n.has_label(f.label())) {
      out.push_back({ConditionGroup::kAtomicity, {ref}, "missing family label " + f.label()});
    }
    for (const auto& [k, v] : components) {
      if (std::find(f.keys.begin(), f.keys.end(), k) == f.keys.end()) {
        out.push_back({ConditionGroup::kAtomicity, {ref},
                       "key '" + k + "' is not a component of " + f.name});
      }
    }
  }
  for (auto& [key, ids] : groups) {
    if (ids.size() < 2) continue;
    out.push_back({ConditionGroup::kCanonicality, ids,
                   std::to_string(ids.size()) + " trait nodes for one " +
                       (key.first.empty() ? std::string("unnamed") : key.first) + " tuple"});
  }
}

void CheckEmbedded(const PropertyGraph& graph, const std::vector<TraitFamily>& families,
                   std::vector<Finding>& out) {
  for (const TraitFamily& f : families) {
    for (const auto& key : f.keys) {
      for (const KeyedValue& kv : graph.ElementsWithKey(key)) {
        if (!IsDomainElement(graph, kv.element) || !f.InScope(graph, kv.element)) continue;
        out.push_back({ConditionGroup::kExclusivity, {kv.element},
                       "embeds '" + key + "' of " + f.name});
      }
    }
  }
}

void CheckTraitEdges(const PropertyGraph& graph, std::vector<Finding>& out) {
  for (EdgeId id : graph.EdgeIds()) {
    const Edge& e = graph.edge(id);
    const ElementRef ref = ElementRef::Edge(id);
    const bool into_trait = IsTraitNode(graph, e.dst);
    if (e.label == kHasTraitLabel) {
      if (!into_trait) {
        out.push_back({ConditionGroup::kExclusivity, {ref}, "HAS_TRAIT edge to a non-trait node"});
      }
      if (!e.props.empty()) {
        out.push_back({ConditionGroup::kExclusivity, {ref}, "HAS_TRAIT edge carries properties"});
      }
      if (e.src.is_node() && IsTraitNode(graph, e.src.id)) {
        out.push_back({ConditionGroup::kExclusivity, {ref}, "HAS_TRAIT edge from a trait node"});
      }
      continue;
    }
    if (into_trait) {
      out.push_back({ConditionGroup::kExclusivity, {ref}, e.label + " edge into a trait node"});
    }
    if (e.src.is_node() && IsTraitNode(graph, e.src.id)) {
      out.push_back({ConditionGroup::kExclusivity, {ref}, e.label + " edge from a trait node"});
    }
  }
}

}  // namespace

std::string_view ConditionGroupName(ConditionGroup group) {
  switch (group) {
    case ConditionGroup::kCanonicality:
      return "canonicality";
    case ConditionGroup::kAtomicity:
      return "atomicity";
    case ConditionGroup::kExclusivity:
      return "exclusivity";
  }
  return "unknown";
}

size_t ConformanceReport::Count(ConditionGroup group) const {
  return std::count_if(findings.begin(), findings.end(),
                       [group](const Finding& f) { return f.group == group; });
}

json ConformanceReport::ToJson(size_t limit) const {
  json j;
  j["conforming"] = conforming();
  for (ConditionGroup g : {ConditionGroup::kCanonicality, ConditionGroup::kAtomicity,
                           ConditionGroup::kExclusivity}) {
    json list = json::array();
    size_t n = 0;
    for (const Finding& f : findings) {
      if (f.group != g) continue;
      if (n++ >= limit) continue;
      json elements = json::array();
      for (const auto& e : f.elements) elements.push_back(e.ToString());
      list.push_back({{"elements", elements}, {"detail", f.detail}});
    }
    j[std::string(ConditionGroupName(g))] = {{"count", n}, {"findings", list}};
  }
  return j;
}

ConformanceReport CheckTraitNormalForm(const PropertyGraph& graph,
                                       const std::vector<TraitFamily>& families) {
  ConformanceReport report;
  CheckTraitNodes(graph, families, report.findings);
  CheckEmbedded(graph, families, report.findings);
  CheckTraitEdges(graph, report.findings);
  std::sort(report.findings.begin(), report.findings.end(), [](const Finding& a, const Finding& b) {
    return std::tie(a.group, a.elements, a.detail) < std::tie(b.group, b.elements, b.detail);
  });
  return report;
}

std::vector<AtomicityFinding> CheckValueAtomicity(const PropertyGraph& graph,
                                                  const std::vector<std::string>& delimiters) {
  std::vector<AtomicityFinding> out;
  auto is_blank = [](std::string_view s) {
    return s.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos;
  };
  auto visit = [&](ElementRef element) {
    for (const auto& [k, v] : graph.properties(element)) {
      if (!v.is_text()) continue;
      std::string_view text = v.as_text();
      for (const auto& d : delimiters) {
        size_t parts = 0;
        size_t pos = 0;
        while (true) {
          size_t next = text.find(d, pos);
          std::string_view part = text.substr(pos, next == std::string_view::npos ? next : next - pos);
          if (!is_blank(part)) ++parts;
          if (next == std::string_view::npos) break;
          pos = next + d.size();
        }
        if (parts >= 2) {
          out.push_back({element, k, d});
          break;
        }
      }
    }
  };
  for (NodeId id : graph.NodeIds()) visit(ElementRef::Node(id));
  for (EdgeId id : graph.EdgeIds()) visit(ElementRef::Edge(id));
  return out;
}

}  // namespace traitnorm
