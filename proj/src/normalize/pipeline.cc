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
#include <exception>
#include <map>
#include <set>

#include "traitnorm/error.h"
#include "traitnorm/normalizer.h"

namespace traitnorm {
namespace {

using Code = NormalizeError::Code;
using nlohmann::json;

bool ScopesOverlap(const LabelSet& a, const LabelSet& b) {
  if (a.empty() || b.empty()) return true;
  for (const auto& l : a) {
    if (b.count(l)) return true;
  }
  return false;
}

void ValidateFamilies(const std::vector<TraitFamily>& families) {
  for (size_t i = 0; i < families.size(); ++i) {
    ValidateFamily(families[i]);
    for (size_t j = 0; j < i; ++j) {
      if (families[i].name == families[j].name) {
        throw NormalizeError(Code::kConfig, "family " + families[i].name + " declared twice");
      }
      if (!ScopesOverlap(families[i].scope, families[j].scope)) continue;
      for (const auto& k : families[i].keys) {
        if (std::find(families[j].keys.begin(), families[j].keys.end(), k) !=
            families[j].keys.end()) {
          throw NormalizeError(Code::kConfig, "key '" + k + "' belongs to both " +
                                                  families[j].name + " and " + families[i].name);
        }
      }
    }
  }
}

// In-scope domain elements carrying at least one key of `family`.
std::set<ElementRef> Carriers(const PropertyGraph& graph, const TraitFamily& family) {
  std::set<ElementRef> out;
  for (const auto& key : family.keys) {
    for (const KeyedValue& kv : graph.ElementsWithKey(key)) {
      if (IsDomainElement(graph, kv.element) && family.InScope(graph, kv.element)) {
        out.insert(kv.element);
      }
    }
  }
  return out;
}

bool AgreesOnPresent(const ValueTuple& partial, const ValueTuple& full) {
  for (size_t i = 0; i < partial.size(); ++i) {
    if (partial[i] && (!full[i] || *full[i] != *partial[i])) return false;
  }
  return true;
}

std::string LabelText(const LabelSet& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ":";
    out += l;
  }
  return out;
}

void DiffProperties(ElementRef element, const PropertyMap& expected, const PropertyMap& actual,
                    std::vector<PropertyDiff>& diffs) {
  auto e = expected.begin();
  auto a = actual.begin();
  while (e != expected.end() || a != actual.end()) {
    if (a == actual.end() || (e != expected.end() && e->first < a->first)) {
      diffs.push_back({element, e->first, e->second, std::nullopt});
      ++e;
    } else if (e == expected.end() || a->first < e->first) {
      diffs.push_back({element, a->first, std::nullopt, a->second});
      ++a;
    } else {
      if (!(e->second == a->second)) diffs.push_back({element, e->first, e->second, a->second});
      ++e;
      ++a;
    }
  }
}

bool IsComplete(const ValueTuple& t) {
  return std::all_of(t.begin(), t.end(), [](const auto& v) { return v.has_value(); });
}

json OptionalValue(const std::optional<PropertyValue>& v) {
  return v ? v->ToJson() : json(nullptr);
}

json FamilyJson(const TraitFamily& f) {
  return json{{"name", f.name}, {"keys", f.keys}, {"scope", json(f.scope)}};
}

NormalizationRun RunPipeline(const PropertyGraph& input, const NormalizerConfig& config,
                             const std::vector<TraitFamily>& families,
                             const DependencySet& sigma) {
  PropertyGraph work = input;
  Detection detection = DetectTraits(work, config, families);
  Extraction extraction = Extract(work, detection.catalog, detection.families, config);

  NormalizationReport report;
  report.tau = config.tau;
  report.families = families;
  report.detection = detection.outcomes;
  report.traits_created = detection.traits_created;
  report.verdicts = EnforceDependencies(work, detection.catalog, families, sigma);
  report.dependencies_satisfied =
      std::all_of(report.verdicts.begin(), report.verdicts.end(),
                  [](const Verdict& v) { return v.satisfied; });
  report.lossless = VerifyLossless(input, work, detection.catalog);
  report.extraction = std::move(extraction);
  report.committed = report.lossless.lossless;

  if (report.committed) {
    return NormalizationRun{std::move(work), std::move(detection.catalog), std::move(report)};
  }
  return NormalizationRun{input, TraitCatalog::FromGraph(input, families), std::move(report)};
}

}  // namespace

Detection DetectTraits(PropertyGraph& graph, const NormalizerConfig& config,
                       const std::vector<TraitFamily>& families) {
  ValidateFamilies(families);
  Detection out;
  std::vector<NodeId> duplicates;
  out.catalog = TraitCatalog::FromGraph(graph, families, &duplicates);
  if (!duplicates.empty()) {
    throw NormalizeError(Code::kInconsistentCatalog,
                         "duplicate trait node " + std::to_string(duplicates.front()) +
                             " for an already catalogued value tuple");
  }

  for (const TraitFamily& family : families) {
    std::set<ValueTuple> tuples;
    for (ElementRef e : Carriers(graph, family)) tuples.insert(*EmbeddedTuple(graph, e, family));
    const size_t existing = out.catalog.CountFamily(family.name);
    if (tuples.empty() && existing == 0) {
      throw NormalizeError(Code::kFamilyAbsent,
                           "family " + family.name + " has no occurrences in the graph");
    }

    FamilyOutcome outcome;
    outcome.family = family.name;
    outcome.distinct_tuples = tuples.size();
    if (tuples.size() > config.tau) {
      outcome.skipped = true;
      outcome.reason = std::to_string(tuples.size()) + " distinct tuples exceed tau=" +
                       std::to_string(config.tau);
      out.outcomes.push_back(std::move(outcome));
      continue;
    }
    std::vector<ValueTuple> complete;
    if (config.partial_match) {
      for (const ValueTuple& t : tuples) {
        if (IsComplete(t)) complete.push_back(t);
      }
      for (const auto& [id, entry] : out.catalog.entries()) {
        if (entry.family == family.name && IsComplete(entry.tuple)) complete.push_back(entry.tuple);
      }
    }
    for (const ValueTuple& t : tuples) {
      // Partial tuples covered by a complete one are left for Extract to link.
      if (!IsComplete(t) &&
          std::any_of(complete.begin(), complete.end(),
                      [&](const ValueTuple& c) { return AgreesOnPresent(t, c); })) {
        continue;
      }
      if (out.catalog.Find(family.name, t)) {
        ++outcome.traits_reused;
        continue;
      }
      PropertyMap props;
      props.emplace(std::string(kFamilyKey), PropertyValue(family.name));
      for (size_t i = 0; i < family.keys.size(); ++i) {
        if (t[i]) props.emplace(family.keys[i], *t[i]);
      }
      NodeId id = graph.CreateNode({std::string(kTraitLabel), family.label()}, std::move(props),
                                   WriteMode::kPrivileged);
      out.catalog.Insert(family.name, t, id);
      ++outcome.traits_created;
    }
    out.traits_created += outcome.traits_created;
    out.families.push_back(family);
    out.outcomes.push_back(std::move(outcome));
  }
  return out;
}

Extraction Extract(PropertyGraph& graph, const TraitCatalog& catalog,
                   const std::vector<TraitFamily>& families, const NormalizerConfig& config) {
  Extraction out;
  for (const TraitFamily& family : families) {
    FamilyExtraction fx;
    fx.family = family.name;

    std::vector<std::pair<NodeId, const ValueTuple*>> candidates;
    if (config.partial_match) {
      for (const auto& [id, entry] : catalog.entries()) {
        if (entry.family == family.name) candidates.emplace_back(id, &entry.tuple);
      }
    }

    struct Linked {
      ElementRef element;
      NodeId trait;
      ValueTuple tuple;
    };
    std::vector<Linked> linked;
    for (ElementRef element : Carriers(graph, family)) {
      ++fx.elements;
      ValueTuple tuple = *EmbeddedTuple(graph, element, family);
      std::optional<NodeId> trait = catalog.Find(family.name, tuple);
      if (!trait && config.partial_match) {
        std::vector<NodeId> hits;
        for (const auto& [id, t] : candidates) {
          if (AgreesOnPresent(tuple, *t)) hits.push_back(id);
        }
        if (hits.size() == 1) {
          trait = hits.front();
          out.partial.push_back({element, family.name, *trait});
        } else if (hits.size() > 1) {
          out.unmatched.push_back({element, family.name,
                                   "ambiguous partial match (" + std::to_string(hits.size()) +
                                       " candidates)"});
          continue;
        }
      }
      if (!trait) {
        out.unmatched.push_back({element, family.name, "no catalogued trait for " +
                                                           RenderTuple(family, tuple)});
        continue;
      }

      bool existing = false;
      bool conflict = false;
      for (EdgeId eid : graph.OutEdges(element)) {
        const Edge& e = graph.edge(eid);
        if (e.label != kHasTraitLabel) continue;
        const TraitEntry* entry = catalog.Lookup(e.dst);
        if (!entry || entry->family != family.name) continue;
        if (e.dst == *trait) {
          existing = true;
        } else {
          conflict = true;
        }
      }
      if (conflict) {
        out.unmatched.push_back({element, family.name,
                                 "already linked to another " + family.name + " trait"});
        continue;
      }
      if (existing) {
        ++fx.links_existing;
      } else {
        graph.CreateEdge(element, *trait, std::string(kHasTraitLabel));
        ++fx.links_added;
      }
      linked.push_back({element, *trait, std::move(tuple)});
    }

    // Coverage: every embedded value must be recoverable from the linked trait
    // before anything is removed.
    std::vector<const Linked*> covered;
    for (const Linked& l : linked) {
      if (AgreesOnPresent(l.tuple, catalog.Lookup(l.trait)->tuple)) {
        covered.push_back(&l);
      } else {
        out.unmatched.push_back({l.element, family.name, "linked trait does not cover values"});
      }
    }
    for (const Linked* l : covered) {
      for (size_t i = 0; i < family.keys.size(); ++i) {
        if (!l->tuple[i]) continue;
        std::optional<PropertyValue> prior = graph.RemoveProperty(l->element, family.keys[i]);
        if (prior) {
          out.ledger.push_back({l->element, family.keys[i], std::move(*prior)});
          ++fx.properties_removed;
        }
      }
    }
    out.links_added += fx.links_added;
    out.properties_removed += fx.properties_removed;
    out.per_family.push_back(std::move(fx));
  }
  return out;
}

std::vector<Verdict> EnforceDependencies(const PropertyGraph& graph, const TraitCatalog& catalog,
                                         const std::vector<TraitFamily>& families,
                                         const DependencySet& sigma) {
  if (sigma.empty()) return {};
  const FamilyUniverse universe = FamilyUniverse::FromFamilies(families);
  const std::vector<Assignment> assignments =
      LinkedAssignments(graph, catalog, families, universe);
  const std::vector<TraitDependency> deps(sigma.begin(), sigma.end());
  std::vector<Verdict> verdicts(deps.size());
  std::vector<std::exception_ptr> errors(deps.size());
  const long n = static_cast<long>(deps.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      verdicts[i] = Holds(assignments, deps[i], universe);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return verdicts;
}

PropertyGraph Reconstruct(const PropertyGraph& normalized, const TraitCatalog& catalog) {
  PropertyGraph out = normalized;
  const std::set<EdgeId>& links = out.EdgesWithLabel(kHasTraitLabel);
  const std::vector<EdgeId> link_ids(links.begin(), links.end());

  std::set<std::pair<ElementRef, std::string>> seen;
  std::vector<EdgeId> drop;
  for (EdgeId eid : link_ids) {
    const Edge& e = out.edge(eid);
    const TraitEntry* entry = catalog.Lookup(e.dst);
    if (!entry) {
      if (IsTraitNode(out, e.dst)) {
        throw NormalizeError(Code::kInconsistentCatalog,
                             "HAS_TRAIT edge " + std::to_string(eid) + " targets node " +
                                 std::to_string(e.dst) + " which is not in the catalog");
      }
      continue;
    }
    if (!seen.emplace(e.src, entry->family).second) {
      throw NormalizeError(Code::kAmbiguousTrait,
                           e.src.ToString() + " links to two " + entry->family + " traits");
    }
    const ElementRef src = e.src;
    const PropertyMap trait_props = out.node(e.dst).props;
    for (const auto& [k, v] : trait_props) {
      if (k != kFamilyKey) out.SetProperty(src, k, v);
    }
    drop.push_back(eid);
  }
  for (EdgeId eid : drop) out.RemoveEdge(eid);
  for (const auto& [id, entry] : catalog.entries()) {
    if (out.HasNode(id) && out.Degree(id) == 0) out.RemoveNode(id);
  }
  return out;
}

LosslessCheck VerifyLossless(const PropertyGraph& original, const PropertyGraph& normalized,
                             const TraitCatalog& catalog) {
  const PropertyGraph rebuilt = Reconstruct(normalized, catalog);
  std::optional<PropertyGraph> original_rebuilt;
  if (!original.EdgesWithLabel(kHasTraitLabel).empty()) {
    original_rebuilt = Reconstruct(original, catalog);
  }
  const PropertyGraph& expected = original_rebuilt ? *original_rebuilt : original;

  LosslessCheck out;
  auto element_diff = [&out](ElementRef element, bool in_expected) {
    out.diffs.push_back({element, "<element>",
                         in_expected ? std::optional<PropertyValue>("present") : std::nullopt,
                         in_expected ? std::nullopt : std::optional<PropertyValue>("present")});
  };

  for (NodeId id : expected.NodeIds()) {
    if (IsTraitNode(expected, id)) continue;
    ElementRef ref = ElementRef::Node(id);
    if (!rebuilt.HasNode(id) || IsTraitNode(rebuilt, id)) {
      element_diff(ref, true);
      continue;
    }
    const Node& a = expected.node(id);
    const Node& b = rebuilt.node(id);
    if (a.labels != b.labels) {
      out.diffs.push_back({ref, "<labels>", PropertyValue(LabelText(a.labels)),
                           PropertyValue(LabelText(b.labels))});
    }
    DiffProperties(ref, a.props, b.props, out.diffs);
  }
  for (NodeId id : rebuilt.NodeIds()) {
    if (!IsTraitNode(rebuilt, id) && (!expected.HasNode(id) || IsTraitNode(expected, id))) {
      element_diff(ElementRef::Node(id), false);
    }
  }
  for (EdgeId id : expected.EdgeIds()) {
    ElementRef ref = ElementRef::Edge(id);
    if (!IsDomainElement(expected, ref)) continue;
    if (!rebuilt.HasEdge(id) || !IsDomainElement(rebuilt, ref)) {
      element_diff(ref, true);
      continue;
    }
    const Edge& a = expected.edge(id);
    const Edge& b = rebuilt.edge(id);
    if (a.src != b.src || a.dst != b.dst || a.label != b.label) {
      out.diffs.push_back({ref, "<endpoints>",
                           PropertyValue(a.src.ToString() + "-[" + a.label + "]->node:" +
                                         std::to_string(a.dst)),
                           PropertyValue(b.src.ToString() + "-[" + b.label + "]->node:" +
                                         std::to_string(b.dst))});
    }
    DiffProperties(ref, a.props, b.props, out.diffs);
  }
  for (EdgeId id : rebuilt.EdgeIds()) {
    ElementRef ref = ElementRef::Edge(id);
    if (IsDomainElement(rebuilt, ref) &&
        (!expected.HasEdge(id) || !IsDomainElement(expected, ref))) {
      element_diff(ref, false);
    }
  }
  out.lossless = out.diffs.empty();
  return out;
}

json NormalizationReport::ToJson() const {
  json j;
  j["tau"] = tau;
  j["committed"] = committed;
  j["lossless"] = lossless.lossless;
  j["dependencies_satisfied"] = dependencies_satisfied;
  j["traits_created"] = traits_created;
  j["links_added"] = extraction.links_added;
  j["properties_removed"] = extraction.properties_removed;

  json fams = json::array();
  for (const auto& f : families) fams.push_back(FamilyJson(f));
  j["families"] = fams;

  json det = json::array();
  for (const auto& o : detection) {
    json d{{"family", o.family},
           {"distinct_tuples", o.distinct_tuples},
           {"traits_created", o.traits_created},
           {"traits_reused", o.traits_reused},
           {"skipped", o.skipped}};
    if (!o.reason.empty()) d["reason"] = o.reason;
    det.push_back(std::move(d));
  }
  j["detection"] = det;

  json ext = json::array();
  for (const auto& f : extraction.per_family) {
    ext.push_back({{"family", f.family},
                   {"elements", f.elements},
                   {"links_added", f.links_added},
                   {"links_existing", f.links_existing},
                   {"properties_removed", f.properties_removed}});
  }
  j["extraction"] = ext;

  json partial = json::array();
  for (const auto& p : extraction.partial) {
    partial.push_back({{"element", p.element.ToString()},
                       {"family", p.family},
                       {"trait", "node:" + std::to_string(p.trait)}});
  }
  j["partial_links"] = partial;

  json unmatched = json::array();
  for (const auto& u : extraction.unmatched) {
    unmatched.push_back(
        {{"element", u.element.ToString()}, {"family", u.family}, {"reason", u.reason}});
  }
  j["unmatched"] = unmatched;

  json deps = json::array();
  for (const auto& v : verdicts) {
    json violations = json::array();
    for (const auto& viol : v.violations) {
      json x = json::array();
      for (const auto& s : viol.x_values) x.push_back(json::parse(s));
      json ys = json::array();
      for (const auto& y : viol.y_values) {
        json row = json::array();
        for (const auto& s : y) row.push_back(json::parse(s));
        ys.push_back(std::move(row));
      }
      json elements = json::array();
      for (const auto& e : viol.elements) elements.push_back(e.ToString());
      violations.push_back({{"x", x}, {"y", ys}, {"elements", elements}});
    }
    deps.push_back({{"dependency", v.dependency},
                    {"satisfied", v.satisfied},
                    {"covered", v.covered},
                    {"skipped", v.skipped},
                    {"missing_y", v.missing_y.size()},
                    {"violations", violations}});
  }
  j["dependencies"] = deps;

  json diffs = json::array();
  for (const auto& d : lossless.diffs) {
    diffs.push_back({{"element", d.element.ToString()},
                     {"key", d.key},
                     {"expected", OptionalValue(d.expected)},
                     {"actual", OptionalValue(d.actual)}});
  }
  j["diffs"] = diffs;

  json ledger = json::array();
  for (const auto& r : extraction.ledger) {
    ledger.push_back({{"element", r.element.ToString()}, {"key", r.key}, {"value", r.value.ToJson()}});
  }
  j["removed_values"] = ledger;
  return j;
}

NormalizationRun Normalize(const PropertyGraph& input, const NormalizerConfig& config,
                           const DependencySet& sigma) {
  return RunPipeline(input, config, ResolveFamilies(input, config), sigma);
}

NormalizationRun Normalize(const PropertyGraph& input, const NormalizerConfig& config,
                           std::string_view dependency_text) {
  std::vector<TraitFamily> families = ResolveFamilies(input, config);
  DependencySet sigma =
      ParseDependencies(dependency_text, FamilyUniverse::FromFamilies(families));
  return RunPipeline(input, config, families, sigma);
}

}  // namespace traitnorm
