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

#include "traitnorm/synth.h"

#include <algorithm>
#include <string>

namespace traitnorm {
namespace {

// Uniform integer in [lo, hi]; avoids distribution differences across
// standard libraries so seeds reproduce everywhere.
uint64_t Pick(std::mt19937_64& rng, uint64_t lo, uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

bool Chance(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) < p;
}

PropertyValue DomainValue(size_t key, uint64_t v) {
  switch (key % 4) {
    case 0:
      return PropertyValue("v" + std::to_string(v));
    case 1:
      return PropertyValue(static_cast<int64_t>(v));
    case 2:
      return PropertyValue(static_cast<double>(v) + 0.5);
    default:
      return PropertyValue(
          Date{2000 + static_cast<int32_t>(v % 20), static_cast<uint8_t>(1 + v % 12), 1});
  }
}

}  // namespace

SyntheticGraph GenerateSynthetic(const SyntheticSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  SyntheticGraph out;
  const size_t arity = std::max<size_t>(1, spec.family_arity);
  for (size_t k = 0; k < spec.keys; k += arity) {
    TraitFamily f;
    f.name = "Meta" + std::to_string(k / arity) + "Trait";
    for (size_t j = k; j < std::min(spec.keys, k + arity); ++j) f.keys.push_back("m" + std::to_string(j));
    out.families.push_back(std::move(f));
  }

  auto metadata = [&](PropertyMap& props) {
    for (const TraitFamily& f : out.families) {
      // Components of a family move together so tuples repeat.
      uint64_t v = Pick(rng, 0, spec.distinct - 1);
      for (size_t j = 0; j < f.keys.size(); ++j) {
        if (spec.missing > 0 && Chance(rng, spec.missing)) continue;
        props.emplace(f.keys[j], DomainValue(j, v));
      }
    }
  };

  const size_t labels = std::max<size_t>(1, spec.labels);
  std::vector<NodeId> ids;
  ids.reserve(spec.nodes);
  for (size_t i = 0; i < spec.nodes; ++i) {
    PropertyMap props;
    props.emplace("id", PropertyValue(static_cast<int64_t>(i)));
    metadata(props);
    ids.push_back(out.graph.CreateNode({"Entity" + std::to_string(i % labels)}, std::move(props)));
  }
  for (size_t i = 0; i + 1 < ids.size(); ++i) {
    for (size_t e = 0; e < spec.edges_per_node; ++e) {
      NodeId dst = ids[Pick(rng, 0, ids.size() - 1)];
      PropertyMap props;
      if (spec.edge_metadata) metadata(props);
      out.graph.CreateEdge(ids[i], dst, "LINK" + std::to_string(e % 2), std::move(props));
    }
  }
  return out;
}

SyntheticGraph RandomGraph(std::mt19937_64& rng, size_t max_elements, size_t max_keys) {
  SyntheticGraph out;
  const size_t nodes = Pick(rng, 1, std::max<size_t>(1, max_elements * 2 / 3));
  const size_t edges = Pick(rng, 0, max_elements - std::min(max_elements, nodes));
  const size_t keys = Pick(rng, 1, std::max<size_t>(1, max_keys));
  const std::vector<std::string> labels = {"A", "B", "C"};

  std::vector<size_t> domain(keys);
  for (auto& d : domain) d = Pick(rng, 1, 4);
  auto props = [&]() {
    PropertyMap p;
    for (size_t k = 0; k < keys; ++k) {
      if (Chance(rng, 0.35)) continue;
      p.emplace("k" + std::to_string(k), DomainValue(k, Pick(rng, 0, domain[k] - 1)));
    }
    return p;
  };

  for (size_t i = 0; i < nodes; ++i) {
    LabelSet ls = {labels[Pick(rng, 0, labels.size() - 1)]};
    if (Chance(rng, 0.2)) ls.insert(labels[Pick(rng, 0, labels.size() - 1)]);
    out.graph.CreateNode(std::move(ls), props());
  }
  for (size_t i = 0; i < edges; ++i) {
    NodeId a = Pick(rng, 0, nodes - 1);
    NodeId b = Pick(rng, 0, nodes - 1);
    out.graph.CreateEdge(a, b, Chance(rng, 0.5) ? "R" : "S", Chance(rng, 0.5) ? props() : PropertyMap{});
  }

  // Partition a random subset of keys into families.
  std::vector<size_t> order(keys);
  for (size_t k = 0; k < keys; ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);
  size_t used = Pick(rng, 1, keys);
  size_t k = 0;
  while (k < used) {
    TraitFamily f;
    f.name = "F" + std::to_string(out.families.size());
    size_t arity = Pick(rng, 1, std::min<size_t>(3, used - k));
    for (size_t j = 0; j < arity; ++j) f.keys.push_back("k" + std::to_string(order[k++]));
    if (Chance(rng, 0.3)) f.scope = {labels[Pick(rng, 0, labels.size() - 1)]};
    if (Chance(rng, 0.15)) f.scope = {"R"};
    out.families.push_back(std::move(f));
  }
  // Keep only families with at least one in-scope occurrence.
  std::erase_if(out.families, [&](const TraitFamily& f) {
    for (const auto& key : f.keys) {
      for (const KeyedValue& kv : out.graph.ElementsWithKey(key)) {
        if (f.InScope(out.graph, kv.element)) return false;
      }
    }
    return true;
  });
  return out;
}

}  // namespace traitnorm
