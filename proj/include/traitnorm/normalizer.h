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

// Trait extraction pipeline.
//
//   1. Detection: profile keys, pick trait families, create one trait node
//      per distinct value tuple (bounded by tau).
//   2. Extraction: link every in-scope element to its trait via HAS_TRAIT,
//      verify coverage, then remove the embedded keys.
//   3. Dependency enforcement: evaluate every trait dependency; violations
//      mark the run non-conforming but never rewrite data.
//   4. Lossless gate: reconstruct the input from the result and commit only
//      if nothing differs.

#ifndef TRAITNORM_NORMALIZER_H_
#define TRAITNORM_NORMALIZER_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "traitnorm/catalog.h"
#include "traitnorm/graph.h"
#include "traitnorm/tfd.h"

namespace traitnorm {

inline constexpr uint64_t kDefaultTau = 1024;

struct NormalizerConfig {
  uint64_t tau = kDefaultTau;
  std::vector<TraitFamily> families;
  // Adds one single-key family per semantically independent key.
  bool auto_detect = false;
  std::set<std::string> allow;
  std::set<std::string> deny;
  // Labels auto-detection may touch; empty means any element.
  LabelSet scope;
  // Link elements whose tuple is not catalogued to the unique trait agreeing
  // on their non-null components. Off by default: such links re-embed the
  // trait's extra components on reconstruction, which the lossless gate
  // then rejects.
  bool partial_match = false;
  std::optional<std::filesystem::path> dependency_file;
  std::vector<std::string> atomicity_delimiters = {";", "|"};

  // Throws NormalizeError(kConfig).
  void Validate() const;
  nlohmann::json ToJson() const;
  // Relative dependency_file paths resolve against `base_dir`.
  static NormalizerConfig FromJson(const nlohmann::json& j,
                                   const std::filesystem::path& base_dir = {});
  static NormalizerConfig Load(const std::filesystem::path& path);
};

struct KeyProfile {
  std::string key;
  size_t occurrences = 0;
  size_t distinct = 0;
  // Occurrences per element type (label combination, or "[LABEL]" for edges).
  std::map<std::string, size_t> per_type;
  bool cross_type_reuse = false;

  // distinct == occurrences on a single type: looks like an identifier.
  bool candidate_identifier() const {
    return occurrences > 0 && distinct == occurrences && per_type.size() == 1;
  }
  friend bool operator==(const KeyProfile&, const KeyProfile&) = default;
};

// One profile per property key on domain elements in `scope` (empty = all),
// sorted by key. Parallel across keys.
std::vector<KeyProfile> ProfileKeys(const PropertyGraph& graph, const LabelSet& scope = {});
// Single pass over every element; the reference the parallel kernel is
// tested against.
std::vector<KeyProfile> ProfileKeysSerial(const PropertyGraph& graph, const LabelSet& scope = {});

struct IndependenceVerdict {
  bool independent = false;
  std::vector<std::string> reasons;
};

// (cross-type reuse OR allow-listed) AND NOT deny-listed. The semantic items
// of the checklist (context-invariant meaning, independent evolution) cannot
// be decided from data and come in only through allow/deny.
IndependenceVerdict IsSemanticallyIndependent(const KeyProfile& profile,
                                              const NormalizerConfig& config);

// Explicit families, plus auto-detected single-key families, plus (under
// auto-detection) families already materialized as trait nodes.
std::vector<TraitFamily> ResolveFamilies(const PropertyGraph& graph,
                                         const NormalizerConfig& config);

struct FamilyOutcome {
  std::string family;
  size_t distinct_tuples = 0;
  size_t traits_created = 0;
  size_t traits_reused = 0;
  bool skipped = false;
  std::string reason;
};

struct Detection {
  std::vector<TraitFamily> families;  // families that passed the tau guard
  std::vector<FamilyOutcome> outcomes;
  TraitCatalog catalog;
  size_t traits_created = 0;
};

// Phase 1. Creates trait nodes labeled `Trait` and the family label, each
// holding its tuple plus a `family` property. Existing trait nodes are
// reused. Throws NormalizeError(kFamilyAbsent) for an explicit family with
// neither embedded occurrences nor trait nodes.
Detection DetectTraits(PropertyGraph& graph, const NormalizerConfig& config,
                       const std::vector<TraitFamily>& families);

struct RemovedValue {
  ElementRef element;
  std::string key;
  PropertyValue value;
};

struct PartialLink {
  ElementRef element;
  std::string family;
  NodeId trait = 0;
};

struct Unmatched {
  ElementRef element;
  std::string family;
  std::string reason;
};

struct FamilyExtraction {
  std::string family;
  size_t elements = 0;
  size_t links_added = 0;
  size_t links_existing = 0;
  size_t properties_removed = 0;
};

struct Extraction {
  std::vector<FamilyExtraction> per_family;
  size_t links_added = 0;
  size_t properties_removed = 0;
  std::vector<RemovedValue> ledger;
  std::vector<PartialLink> partial;
  std::vector<Unmatched> unmatched;
};

// Phase 2. Idempotent: an existing identical link is not duplicated.
Extraction Extract(PropertyGraph& graph, const TraitCatalog& catalog,
                   const std::vector<TraitFamily>& families, const NormalizerConfig& config);

// Phase 3. Evaluated in parallel across dependencies; read-only.
std::vector<Verdict> EnforceDependencies(const PropertyGraph& graph, const TraitCatalog& catalog,
                                         const std::vector<TraitFamily>& families,
                                         const DependencySet& sigma);

// Replaces each HAS_TRAIT link to a catalogued trait by re-embedding the
// trait's tuple on the source element, then drops the links and the trait
// nodes. Throws NormalizeError(kAmbiguousTrait) for an element linked to two
// traits of one family, kInconsistentCatalog for a HAS_TRAIT edge into an
// uncatalogued trait node.
PropertyGraph Reconstruct(const PropertyGraph& normalized, const TraitCatalog& catalog);

struct PropertyDiff {
  ElementRef element;
  std::string key;  // "<element>" when the element itself is missing/extra
  std::optional<PropertyValue> expected;
  std::optional<PropertyValue> actual;
};

struct LosslessCheck {
  bool lossless = true;
  std::vector<PropertyDiff> diffs;
};

// Compares Reconstruct(normalized) with Reconstruct(original) over domain
// elements: labels, endpoints and property maps.
LosslessCheck VerifyLossless(const PropertyGraph& original, const PropertyGraph& normalized,
                             const TraitCatalog& catalog);

struct NormalizationReport {
  uint64_t tau = kDefaultTau;
  std::vector<TraitFamily> families;
  std::vector<FamilyOutcome> detection;
  Extraction extraction;
  size_t traits_created = 0;
  std::vector<Verdict> verdicts;
  bool dependencies_satisfied = true;
  LosslessCheck lossless;
  // False when the lossless gate rejected the rewrite; the output graph is
  // then the unchanged input.
  bool committed = false;

  nlohmann::json ToJson() const;
};

struct NormalizationRun {
  PropertyGraph graph;
  TraitCatalog catalog;
  NormalizationReport report;
};

// Full pipeline over a copy of `input`.
NormalizationRun Normalize(const PropertyGraph& input, const NormalizerConfig& config,
                           const DependencySet& sigma = {});
// Parses `dependency_text` against the resolved families first.
NormalizationRun Normalize(const PropertyGraph& input, const NormalizerConfig& config,
                           std::string_view dependency_text);

}  // namespace traitnorm

#endif  // TRAITNORM_NORMALIZER_H_
