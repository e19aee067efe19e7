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

#include "oracles.h"

#include <fstream>
#include <map>

namespace traitnorm::testing {

Mask NaiveClosure(Mask x, const std::vector<MaskDep>& deps) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const MaskDep& d : deps) {
      if ((d.lhs & x) == d.lhs && (d.rhs & ~x) != 0) {
        x |= d.rhs;
        changed = true;
      }
    }
  }
  return x;
}

namespace {

// Which of the pairs (0,1), (0,2), (1,2) agree under each partition of
// three elements.
constexpr uint8_t kPartitions[5] = {0b111, 0b001, 0b010, 0b100, 0b000};

bool Satisfies(const std::vector<Mask>& agree, const MaskDep& d) {
  for (Mask a : agree) {
    if ((d.lhs & a) == d.lhs && (d.rhs & a) != d.rhs) return false;
  }
  return true;
}

bool AllSatisfied(const std::vector<Mask>& agree, const std::vector<MaskDep>& deps) {
  for (const MaskDep& d : deps) {
    if (!Satisfies(agree, d)) return false;
  }
  return true;
}

}  // namespace

bool SemanticallyImplies(size_t n, const std::vector<MaskDep>& deps, const MaskDep& fd) {
  // Two elements: one agreement set per instance.
  for (Mask agree = 0; agree < (Mask{1} << n); ++agree) {
    std::vector<Mask> pairs = {agree};
    if (AllSatisfied(pairs, deps) && !Satisfies(pairs, fd)) return false;
  }
  // Three elements: every attribute picks one of five partitions.
  size_t total = 1;
  for (size_t i = 0; i < n; ++i) total *= 5;
  for (size_t code = 0; code < total; ++code) {
    std::vector<Mask> pairs(3, 0);
    size_t c = code;
    for (size_t attr = 0; attr < n; ++attr, c /= 5) {
      uint8_t p = kPartitions[c % 5];
      for (size_t pair = 0; pair < 3; ++pair) {
        if (p & (1u << pair)) pairs[pair] |= Mask{1} << attr;
      }
    }
    if (AllSatisfied(pairs, deps) && !Satisfies(pairs, fd)) return false;
  }
  return true;
}

MaskDep RandomMaskDep(std::mt19937_64& rng, size_t n) {
  const Mask full = (Mask{1} << n) - 1;
  MaskDep d;
  while (d.lhs == 0) d.lhs = static_cast<Mask>(rng()) & full;
  while (d.rhs == 0) d.rhs = static_cast<Mask>(rng()) & full;
  // Sparse sides make chains of inference more likely.
  if (rng() % 2 && (d.lhs & (d.lhs - 1))) d.lhs &= d.lhs - 1;
  if (rng() % 2) d.rhs = d.rhs & (~d.rhs + 1);
  return d;
}

std::vector<MaskDep> RandomMaskDeps(std::mt19937_64& rng, size_t n, size_t max_deps) {
  std::vector<MaskDep> out(rng() % (max_deps + 1));
  for (auto& d : out) d = RandomMaskDep(rng, n);
  return out;
}

FamilySet ToFamilySet(Mask m) {
  FamilySet s;
  for (FamilyId i = 0; i < 32; ++i) {
    if (m & (Mask{1} << i)) s.insert(i);
  }
  return s;
}

Mask ToMask(const FamilySet& s) {
  Mask m = 0;
  for (FamilyId i : s) m |= Mask{1} << i;
  return m;
}

DependencySet ToDependencySet(const std::vector<MaskDep>& deps) {
  DependencySet out;
  for (const MaskDep& d : deps) out.Add({ToFamilySet(d.lhs), ToFamilySet(d.rhs)});
  return out;
}

bool PairwiseHolds(const std::vector<Assignment>& assignments, const TraitDependency& fd) {
  auto all_present = [](const Assignment& a, const FamilySet& s) {
    for (FamilyId id : s) {
      if (!a.values[id]) return false;
    }
    return true;
  };
  for (size_t i = 0; i < assignments.size(); ++i) {
    const Assignment& a = assignments[i];
    if (!all_present(a, fd.lhs) || !all_present(a, fd.rhs)) continue;
    for (size_t j = i + 1; j < assignments.size(); ++j) {
      const Assignment& b = assignments[j];
      if (!all_present(b, fd.lhs) || !all_present(b, fd.rhs)) continue;
      bool same_x = true;
      for (FamilyId id : fd.lhs) same_x = same_x && *a.values[id] == *b.values[id];
      if (!same_x) continue;
      for (FamilyId id : fd.rhs) {
        if (*a.values[id] != *b.values[id]) return false;
      }
    }
  }
  return true;
}

namespace {

struct View {
  std::string labels;
  std::string endpoints;
  std::map<std::string, std::string> props;
};

std::string Render(const PropertyValue& v) { return v.ToJson().dump(); }

bool IsTrait(const PropertyGraph& g, NodeId id) { return g.node(id).has_label("Trait"); }

std::map<std::string, View> Rebuild(const PropertyGraph& g, std::vector<std::string>& conflicts) {
  std::map<std::string, View> out;
  auto fill = [&](ElementRef ref, View& view) {
    for (const auto& [k, v] : g.properties(ref)) view.props[k] = Render(v);
    for (EdgeId e : g.OutEdges(ref)) {
      const Edge& edge = g.edge(e);
      if (edge.label != "HAS_TRAIT" || !IsTrait(g, edge.dst)) continue;
      for (const auto& [k, v] : g.properties(ElementRef::Node(edge.dst))) {
        if (k == "family") continue;
        std::string r = Render(v);
        auto [it, fresh] = view.props.emplace(k, r);
        if (!fresh && it->second != r) {
          conflicts.push_back(ref.ToString() + "." + k + ": " + it->second + " vs " + r);
        }
      }
    }
  };
  for (NodeId id : g.NodeIds()) {
    if (IsTrait(g, id)) continue;
    View v;
    for (const auto& l : g.node(id).labels) v.labels += l + ":";
    fill(ElementRef::Node(id), v);
    out[ElementRef::Node(id).ToString()] = std::move(v);
  }
  for (EdgeId id : g.EdgeIds()) {
    const Edge& e = g.edge(id);
    if (e.label == "HAS_TRAIT") continue;
    View v;
    v.labels = e.label;
    v.endpoints = e.src.ToString() + "->" + std::to_string(e.dst);
    fill(ElementRef::Edge(id), v);
    out[ElementRef::Edge(id).ToString()] = std::move(v);
  }
  return out;
}

}  // namespace

std::vector<std::string> RoundTripDiffs(const PropertyGraph& original,
                                        const PropertyGraph& normalized) {
  std::vector<std::string> diffs;
  auto before = Rebuild(original, diffs);
  auto after = Rebuild(normalized, diffs);
  for (const auto& [id, view] : before) {
    auto it = after.find(id);
    if (it == after.end()) {
      diffs.push_back(id + " missing");
      continue;
    }
    if (it->second.labels != view.labels) diffs.push_back(id + " labels differ");
    if (it->second.endpoints != view.endpoints) diffs.push_back(id + " endpoints differ");
    if (it->second.props != view.props) diffs.push_back(id + " properties differ");
  }
  for (const auto& [id, view] : after) {
    if (!before.count(id)) diffs.push_back(id + " extra");
  }
  return diffs;
}

std::filesystem::path DataDir() { return TRAITNORM_DATA_DIR; }
std::filesystem::path GoldenDir() { return TRAITNORM_GOLDEN_DIR; }

nlohmann::json Golden(const std::string& name) {
  std::ifstream in(GoldenDir() / name);
  return nlohmann::json::parse(in);
}

}  // namespace traitnorm::testing
