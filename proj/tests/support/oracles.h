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

// Reference implementations used only by tests. None of them call into the
// library code they are compared against.

#ifndef TRAITNORM_TESTS_ORACLES_H_
#define TRAITNORM_TESTS_ORACLES_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "traitnorm/catalog.h"
#include "traitnorm/graph.h"
#include "traitnorm/tfd.h"

namespace traitnorm::testing {

// Attribute sets as bitmasks over at most 32 names.
using Mask = uint32_t;

struct MaskDep {
  Mask lhs = 0;
  Mask rhs = 0;
};

// Repeats "if lhs is inside, add rhs" until nothing changes.
Mask NaiveClosure(Mask x, const std::vector<MaskDep>& deps);

// True iff every instance over `n` attributes with two or three elements
// that satisfies `deps` also satisfies `fd`. Each attribute independently
// partitions the elements; all partitions are enumerated.
bool SemanticallyImplies(size_t n, const std::vector<MaskDep>& deps, const MaskDep& fd);

// Random dependency set over `n` attributes with non-empty sides.
std::vector<MaskDep> RandomMaskDeps(std::mt19937_64& rng, size_t n, size_t max_deps);
MaskDep RandomMaskDep(std::mt19937_64& rng, size_t n);

FamilySet ToFamilySet(Mask m);
Mask ToMask(const FamilySet& s);
DependencySet ToDependencySet(const std::vector<MaskDep>& deps);

// Pairwise check of X -> Y: any two elements with every X value present
// and equal, and every Y value present, agree on Y.
bool PairwiseHolds(const std::vector<Assignment>& assignments, const TraitDependency& fd);

// Rebuilds the embedded view of every domain element of `normalized` by
// copying linked trait components back, then lists every mismatch against
// `original` as a readable line. Empty means a lossless round trip.
std::vector<std::string> RoundTripDiffs(const PropertyGraph& original,
                                        const PropertyGraph& normalized);

// Fixture locations baked in at configure time.
std::filesystem::path DataDir();
std::filesystem::path GoldenDir();
nlohmann::json Golden(const std::string& name);

}  // namespace traitnorm::testing

#endif  // TRAITNORM_TESTS_ORACLES_H_
