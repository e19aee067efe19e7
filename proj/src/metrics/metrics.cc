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

#include "traitnorm/metrics.h"

#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_set>

#include "traitnorm/error.h"

namespace traitnorm {
namespace {

using nlohmann::json;

void FillTotals(const PropertyGraph& graph, const std::vector<TraitFamily>& families,
                MetricsReport& r) {
  for (const auto& f : families) r.scope.push_back(f.name);
  for (const auto& u : r.per_key) r.embedded_occurrences += u.occurrences;
  r.mrr_embedded = r.embedded_occurrences == 0
                       ? 1.0
                       : static_cast<double>(r.embedded_occurrences) /
                             static_cast<double>(r.distinct_tuples);

  const auto& traits = graph.NodesWithLabel(kTraitLabel);
  r.trait_nodes = traits.size();
  for (NodeId id : traits) r.trait_properties += graph.node(id).props.size();
  r.trait_links = graph.EdgesWithLabel(kHasTraitLabel).size();
  r.trait_reuse_ratio = r.trait_nodes == 0 ? 0.0
                                           : static_cast<double>(r.trait_links) /
                                                 static_cast<double>(r.trait_nodes);
  r.nodes = graph.node_count();
  r.edges = graph.edge_count();
  r.properties = graph.property_count();
  r.scm = r.nodes + r.edges + r.properties;
}

bool Carries(const PropertyGraph& graph, const TraitFamily& f, const KeyedValue& kv) {
  return IsDomainElement(graph, kv.element) && f.InScope(graph, kv.element);
}

std::string Fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

MetricsReport Measure(const PropertyGraph& graph, const std::vector<TraitFamily>& families) {
  MetricsReport r;
  std::vector<std::pair<size_t, size_t>> tasks;
  for (size_t f = 0; f < families.size(); ++f) {
    for (size_t k = 0; k < families[f].keys.size(); ++k) tasks.emplace_back(f, k);
  }
  r.per_key.resize(tasks.size());
  std::vector<size_t> distinct(families.size(), 0);

  const long ntasks = static_cast<long>(tasks.size());
  const long nfamilies = static_cast<long>(families.size());
#pragma omp parallel
  {
#pragma omp for schedule(dynamic) nowait
    for (long t = 0; t < ntasks; ++t) {
      const TraitFamily& f = families[tasks[t].first];
      const std::string& key = f.keys[tasks[t].second];
      KeyUsage u{f.name, key, 0, 0};
      std::unordered_set<PropertyValue> values;
      for (const KeyedValue& kv : graph.ElementsWithKey(key)) {
        if (!Carries(graph, f, kv)) continue;
        ++u.occurrences;
        values.insert(*kv.value);
      }
      u.distinct_values = values.size();
      r.per_key[t] = std::move(u);
    }
#pragma omp for schedule(dynamic)
    for (long fi = 0; fi < nfamilies; ++fi) {
      const TraitFamily& f = families[fi];
      std::set<ElementRef> carriers;
      for (const auto& key : f.keys) {
        for (const KeyedValue& kv : graph.ElementsWithKey(key)) {
          if (Carries(graph, f, kv)) carriers.insert(kv.element);
        }
      }
      std::set<ValueTuple> tuples;
      for (ElementRef e : carriers) tuples.insert(*EmbeddedTuple(graph, e, f));
      distinct[fi] = tuples.size();
    }
  }
  for (size_t d : distinct) r.distinct_tuples += d;
  FillTotals(graph, families, r);
  return r;
}

MetricsReport MeasureSerial(const PropertyGraph& graph, const std::vector<TraitFamily>& families) {
  MetricsReport r;
  std::vector<std::vector<std::set<PropertyValue>>> values(families.size());
  std::vector<std::vector<size_t>> occurrences(families.size());
  std::vector<std::set<ValueTuple>> tuples(families.size());
  for (size_t f = 0; f < families.size(); ++f) {
    values[f].resize(families[f].keys.size());
    occurrences[f].resize(families[f].keys.size());
  }
  auto visit = [&](ElementRef element) {
    if (!IsDomainElement(graph, element)) return;
    const PropertyMap& props = graph.properties(element);
    for (size_t f = 0; f < families.size(); ++f) {
      const TraitFamily& family = families[f];
      if (!family.InScope(graph, element)) continue;
      ValueTuple tuple(family.keys.size());
      bool any = false;
      for (size_t k = 0; k < family.keys.size(); ++k) {
        auto it = props.find(family.keys[k]);
        if (it == props.end()) continue;
        any = true;
        tuple[k] = it->second;
        ++occurrences[f][k];
        values[f][k].insert(it->second);
      }
      if (any) tuples[f].insert(std::move(tuple));
    }
  };
  for (NodeId id : graph.NodeIds()) visit(ElementRef::Node(id));
  for (EdgeId id : graph.EdgeIds()) visit(ElementRef::Edge(id));

  for (size_t f = 0; f < families.size(); ++f) {
    for (size_t k = 0; k < families[f].keys.size(); ++k) {
      r.per_key.push_back({families[f].name, families[f].keys[k], occurrences[f][k],
                           values[f][k].size()});
    }
    r.distinct_tuples += tuples[f].size();
  }
  FillTotals(graph, families, r);
  return r;
}

double MetadataReuseRatio(const PropertyGraph& graph, const std::vector<TraitFamily>& families) {
  return Measure(graph, families).mrr_embedded;
}

size_t SchemaComplexity(const PropertyGraph& graph) {
  return graph.node_count() + graph.edge_count() + graph.property_count();
}

RedundancyRemoval RedundancyRemoved(const MetricsReport& pre, const MetricsReport& post,
                                    size_t ledger_entries) {
  if (pre.scope != post.scope) throw Error("metrics reports measure different family scopes");
  RedundancyRemoval out;
  out.duplicates = pre.embedded_occurrences - pre.distinct_tuples;
  out.removed = pre.embedded_occurrences >= post.embedded_occurrences
                    ? pre.embedded_occurrences - post.embedded_occurrences
                    : 0;
  out.ledger = ledger_entries;
  out.reconciled = out.removed == out.ledger &&
                   pre.embedded_occurrences >= post.embedded_occurrences;
  return out;
}

json MetricsReport::ToJson() const {
  json keys = json::array();
  for (const auto& u : per_key) {
    keys.push_back({{"family", u.family},
                    {"key", u.key},
                    {"occurrences", u.occurrences},
                    {"distinct_values", u.distinct_values}});
  }
  return json{{"scope", scope},
              {"embedded_occurrences", embedded_occurrences},
              {"distinct_tuples", distinct_tuples},
              {"mrr_embedded", mrr_embedded},
              {"trait_nodes", trait_nodes},
              {"trait_links", trait_links},
              {"trait_properties", trait_properties},
              {"trait_reuse_ratio", trait_reuse_ratio},
              {"nodes", nodes},
              {"edges", edges},
              {"properties", properties},
              {"scm", scm},
              {"per_key", keys}};
}

json AblationJson(const std::vector<AblationRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = row.metrics.ToJson();
    r.erase("per_key");
    r["state"] = row.state;
    out.push_back(std::move(r));
  }
  return out;
}

std::string AblationText(const std::vector<AblationRow>& rows) {
  const std::vector<std::string> header = {"state",       "embedded", "distinct",
                                           "mrr",         "traits",   "links",
                                           "trait_reuse", "scm"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    const MetricsReport& m = row.metrics;
    cells.push_back({row.state, std::to_string(m.embedded_occurrences),
                     std::to_string(m.distinct_tuples), Fixed(m.mrr_embedded, 2),
                     std::to_string(m.trait_nodes), std::to_string(m.trait_links),
                     Fixed(m.trait_reuse_ratio, 2), std::to_string(m.scm)});
  }
  std::vector<size_t> width(header.size());
  for (size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : cells) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (size_t c = 0; c < r.size(); ++c) {
      if (c) os << "  ";
      if (c == 0) {
        os << std::left << std::setw(static_cast<int>(width[c])) << r[c];
      } else {
        os << std::right << std::setw(static_cast<int>(width[c])) << r[c];
      }
    }
    os << "\n";
  };
  line(header);
  for (const auto& r : cells) line(r);
  return os.str();
}

}  // namespace traitnorm
