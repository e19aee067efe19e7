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

#ifndef TRAITNORM_DUMP_H_
#define TRAITNORM_DUMP_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "traitnorm/graph.h"

namespace traitnorm {

inline constexpr std::string_view kDumpFormat = "traitnorm-dump/1";

// Line-delimited JSON. One header record, then nodes by id, then edges by id.
// Object keys are sorted, so equal graphs produce byte-identical dumps.
//
//   {"format":"traitnorm-dump/1","kind":"header","next_edge_id":7,"next_node_id":5}
//   {"id":0,"kind":"node","labels":["Customer"],"props":{"city":"Berlin"}}
//   {"dst":3,"id":0,"kind":"edge","label":"PURCHASED","props":{},"src":0}
//
// An edge whose source is another edge carries "src_kind":"edge".
void WriteDump(const PropertyGraph& graph, std::ostream& out);
std::string DumpToString(const PropertyGraph& graph);
void SaveDump(const PropertyGraph& graph, const std::filesystem::path& path);

// Throws GraphError(kMalformedDump) with "line N:" diagnostics.
PropertyGraph ReadDump(std::istream& in);
PropertyGraph LoadDump(const std::filesystem::path& path);

}  // namespace traitnorm

#endif  // TRAITNORM_DUMP_H_
