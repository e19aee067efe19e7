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

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_set>

#include "traitnorm/normalizer.h"
#include "traitnorm/schema.h"

namespace traitnorm {
namespace {

bool InProfileScope(const PropertyGraph& graph, ElementRef element, const LabelSet& scope) {
  if (!IsDomainElement(graph, element)) return false;
  if (scope.empty()) return true;
  if (element.is_edge()) return scope.count(graph.edge(element.id).label) != 0;
  for (const auto& l : graph.node(element.id).labels) {
    if (scope.count(l)) return true;
  }
  return false;
}

std::string TypeName(const PropertyGraph& graph, ElementRef element) {
  if (element.is_node()) return NodeTypeName(graph.node(element.id).labels);
  return "[" + graph.edge(element.id).label + "]";
}

KeyProfile ProfileOneKey(const PropertyGraph& graph, const std::string& key,
                         const LabelSet& scope) {
  KeyProfile p;
  p.key = key;
  std::unordered_set<PropertyValue> seen;
  for (const KeyedValue& kv : graph.ElementsWithKey(key)) {
    if (!InProfileScope(graph, kv.element, scope)) continue;
    ++p.occurrences;
    ++p.per_type[TypeName(graph, kv.element)];
    seen.insert(*kv.value);
  }
  p.distinct = seen.size();
  p.cross_type_reuse = p.per_type.size() >= 2;
  return p;
}

std::string AutoFamilyName(const std::string& key) {
  std::string name;
  bool upper = true;
  for (char c : key) {
    if (!std::isalnum(static_cast<unsigned char>(c))) {
      upper = true;
      continue;
    }
    name += upper ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
    upper = false;
  }
  if (name.empty()) name = "Key";
  return name + "Trait";
}

}  // namespace

std::vector<KeyProfile> ProfileKeys(const PropertyGraph& graph, const LabelSet& scope) {
  const std::vector<std::string> keys = graph.Keys();
  std::vector<KeyProfile> profiles(keys.size());
  const long n = static_cast<long>(keys.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    profiles[i] = ProfileOneKey(graph, keys[i], scope);
  }
  std::erase_if(profiles, [](const KeyProfile& p) { return p.occurrences == 0; });
  return profiles;
}

std::vector<KeyProfile> ProfileKeysSerial(const PropertyGraph& graph, const LabelSet& scope) {
  struct Acc {
    size_t occurrences = 0;
    std::unordered_set<PropertyValue> values;
    std::map<std::string, size_t> per_type;
  };
  std::map<std::string, Acc> acc;
  auto visit = [&](ElementRef element) {
    if (!InProfileScope(graph, element, scope)) return;
    const std::string type = TypeName(graph, element);
    for (const auto& [k, v] : graph.properties(element)) {
      Acc& a = acc[k];
      ++a.occurrences;
      a.values.insert(v);
      ++a.per_type[type];
    }
  };
  for (NodeId id : graph.NodeIds()) visit(ElementRef::Node(id));
  for (EdgeId id : graph.EdgeIds()) visit(ElementRef::Edge(id));

  std::vector<KeyProfile> out;
  out.reserve(acc.size());
  for (auto& [k, a] : acc) {
    KeyProfile p;
    p.key = k;
    p.occurrences = a.occurrences;
    p.distinct = a.values.size();
    p.per_type = std::move(a.per_type);
    p.cross_type_reuse = p.per_type.size() >= 2;
    out.push_back(std::move(p));
  }
  return out;
}

IndependenceVerdict IsSemanticallyIndependent(const KeyProfile& profile,
                                              const NormalizerConfig& config) {
  IndependenceVerdict v;
  if (config.deny.count(profile.key)) {
    v.reasons.push_back("deny-listed");
    return v;
  }
  if (config.allow.count(profile.key)) {
    v.reasons.push_back("allow-listed");
    v.independent = true;
    return v;
  }
  if (profile.candidate_identifier()) {
    v.reasons.push_back("candidate identifier (unique per element on one type)");
    return v;
  }
  if (profile.cross_type_reuse) {
    v.reasons.push_back("reused across " + std::to_string(profile.per_type.size()) + " types");
    v.independent = true;
  } else {
    v.reasons.push_back("used on a single type");
  }
  return v;
}

std::vector<TraitFamily> ResolveFamilies(const PropertyGraph& graph,
                                         const NormalizerConfig& config) {
  config.Validate();
  std::vector<TraitFamily> families = config.families;
  if (!config.auto_detect) return families;

  std::set<std::string> names;
  std::set<std::string> covered;
  for (const auto& f : families) {
    names.insert(f.name);
    covered.insert(f.keys.begin(), f.keys.end());
  }
  for (const KeyProfile& p : ProfileKeys(graph, config.scope)) {
    if (covered.count(p.key) || !IsSemanticallyIndependent(p, config).independent) continue;
    TraitFamily f{AutoFamilyName(p.key), {p.key}, config.scope};
    if (!names.insert(f.name).second) continue;
    families.push_back(std::move(f));
  }

  // Families materialized by an earlier run.
  std::map<std::string, std::set<std::string>> existing;
  for (NodeId id : graph.NodesWithLabel(kTraitLabel)) {
    const Node& n = graph.node(id);
    auto fam = n.props.find(kFamilyKey);
    if (fam == n.props.end() || !fam->second.is_text() || names.count(fam->second.as_text())) {
      continue;
    }
    auto& keys = existing[fam->second.as_text()];
    for (const auto& [k, v] : n.props) {
      if (k != kFamilyKey) keys.insert(k);
    }
  }
  for (auto& [name, keys] : existing) {
    if (keys.empty() || name == kTraitLabel) continue;
    families.push_back(TraitFamily{name, {keys.begin(), keys.end()}, config.scope});
  }
  return families;
}

}  // namespace traitnorm
