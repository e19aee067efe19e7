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

// Trait functional dependencies: X -> Y over trait families.
//
// Reasoning (closure, implication) works on family names only. Checking
// whether a dependency holds on an instance compares the values elements are
// assigned for each family, either through HAS_TRAIT links or through the
// embedded keys before extraction.

#ifndef TRAITNORM_TFD_H_
#define TRAITNORM_TFD_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "traitnorm/catalog.h"
#include "traitnorm/graph.h"

namespace traitnorm {

using FamilyId = uint32_t;
using FamilySet = std::set<FamilyId>;

// The declared set of names dependencies may mention. Built from trait
// families, every family F contributes the name "F" (the whole trait) and
// one name "F.key" per component.
class FamilyUniverse {
 public:
  FamilyUniverse() = default;
  explicit FamilyUniverse(std::vector<std::string> names);
  static FamilyUniverse FromFamilies(const std::vector<TraitFamily>& families);

  size_t size() const { return names_.size(); }
  const std::string& name(FamilyId id) const { return names_.at(id); }
  std::optional<FamilyId> Find(std::string_view name) const;
  // Throws DependencyError(kUndeclaredFamily).
  FamilyId Require(std::string_view name) const;
  FamilySet Set(std::initializer_list<std::string_view> names) const;

  // For universes built from families: which family and which component
  // (nullopt = the whole tuple) a name denotes.
  struct Binding {
    size_t family = 0;
    std::optional<size_t> component;
  };
  const std::optional<Binding>& binding(FamilyId id) const { return bindings_.at(id); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, FamilyId, std::less<>> index_;
  std::vector<std::optional<Binding>> bindings_;
};

struct TraitDependency {
  FamilySet lhs;
  FamilySet rhs;

  friend auto operator<=>(const TraitDependency&, const TraitDependency&) = default;
};

// Set of dependencies; duplicates collapse.
class DependencySet {
 public:
  DependencySet() = default;
  DependencySet(std::initializer_list<TraitDependency> deps);

  // Throws DependencyError(kEmpty) for an empty side. Returns false for a
  // duplicate.
  bool Add(TraitDependency dep);
  size_t size() const { return deps_.size(); }
  bool empty() const { return deps_.empty(); }
  auto begin() const { return deps_.begin(); }
  auto end() const { return deps_.end(); }

 private:
  std::set<TraitDependency> deps_;
};

// X+ under reflexivity, augmentation and transitivity. Linear in the total
// size of `sigma` (counter-per-dependency propagation). Throws
// DependencyError(kUndeclaredFamily) for ids outside `universe`.
FamilySet Closure(const FamilySet& x, const DependencySet& sigma,
                  const FamilyUniverse& universe);

bool Implies(const DependencySet& sigma, const TraitDependency& fd,
             const FamilyUniverse& universe);

// Dependency file: one dependency per line, "A[,B...] -> C[,D...]". '#'
// starts a comment. Errors report line and column.
DependencySet ParseDependencies(std::string_view text, const FamilyUniverse& universe);
DependencySet LoadDependencies(const std::string& path, const FamilyUniverse& universe);
std::string FormatDependency(const TraitDependency& fd, const FamilyUniverse& universe);

// Per-element values for every universe name, as canonical strings. nullopt
// means the element has no value for that name.
struct Assignment {
  ElementRef element;
  std::vector<std::optional<std::string>> values;
};

// Values through HAS_TRAIT links. Elements without any link are omitted.
// Throws DependencyError(kMalformedLinking) if an element links to two
// traits of one family, NormalizeError(kInconsistentCatalog) for a link to a
// node missing from `catalog`.
std::vector<Assignment> LinkedAssignments(const PropertyGraph& graph, const TraitCatalog& catalog,
                                          const std::vector<TraitFamily>& families,
                                          const FamilyUniverse& universe);

// Values read from embedded keys. Elements carrying none of the families'
// keys in scope are omitted.
std::vector<Assignment> EmbeddedAssignments(const PropertyGraph& graph,
                                            const std::vector<TraitFamily>& families,
                                            const FamilyUniverse& universe);

struct Violation {
  std::vector<std::string> x_values;
  std::vector<std::vector<std::string>> y_values;  // >= 2 distinct, sorted
  std::vector<ElementRef> elements;
};

struct Verdict {
  std::string dependency;
  bool satisfied = true;
  std::vector<Violation> violations;
  size_t covered = 0;  // elements carrying every X value
  size_t skipped = 0;  // elements lacking some X value (vacuous)
  // Elements carrying X but missing some Y value. Reported, never a violation.
  std::vector<ElementRef> missing_y;
};

Verdict Holds(const std::vector<Assignment>& assignments, const TraitDependency& fd,
              const FamilyUniverse& universe);

// Convenience over LinkedAssignments.
Verdict Holds(const PropertyGraph& graph, const TraitCatalog& catalog,
              const std::vector<TraitFamily>& families, const TraitDependency& fd);

}  // namespace traitnorm

#endif  // TRAITNORM_TFD_H_
