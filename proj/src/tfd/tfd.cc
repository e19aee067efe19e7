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

#include "traitnorm/tfd.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "traitnorm/error.h"

namespace traitnorm {
namespace {

using Code = DependencyError::Code;

void CheckIds(const FamilySet& s, const FamilyUniverse& universe) {
  for (FamilyId id : s) {
    if (id >= universe.size()) {
      throw DependencyError(Code::kUndeclaredFamily,
                            "family id " + std::to_string(id) + " is not in the universe");
    }
  }
}

bool IsNameChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '.';
}

std::string Position(size_t line, size_t col) {
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Parses one side of a dependency starting at column offset `base`.
FamilySet ParseSide(std::string_view side, size_t line, size_t base,
                    const FamilyUniverse& universe) {
  FamilySet out;
  size_t i = 0;
  bool expect_name = true;
  while (i < side.size()) {
    char c = side[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (expect_name) {
      size_t start = i;
      while (i < side.size() && IsNameChar(side[i])) ++i;
      if (i == start) {
        throw DependencyError(Code::kSyntax, Position(line, base + start + 1) +
                                                 ": expected a family name, found '" +
                                                 std::string(1, c) + "'");
      }
      std::string_view name = side.substr(start, i - start);
      auto id = universe.Find(name);
      if (!id) {
        throw DependencyError(Code::kUndeclaredFamily, Position(line, base + start + 1) +
                                                           ": undeclared family '" +
                                                           std::string(name) + "'");
      }
      out.insert(*id);
      expect_name = false;
    } else {
      if (c != ',') {
        throw DependencyError(Code::kSyntax, Position(line, base + i + 1) +
                                                 ": expected ',' or '->', found '" +
                                                 std::string(1, c) + "'");
      }
      ++i;
      expect_name = true;
    }
  }
  if (expect_name) {
    throw DependencyError(Code::kSyntax,
                          Position(line, base + side.size() + 1) + ": missing family name");
  }
  return out;
}

std::string ValueKey(const PropertyValue& v) { return v.ToJson().dump(); }

}  // namespace

FamilyUniverse::FamilyUniverse(std::vector<std::string> names) {
  for (auto& n : names) {
    if (index_.count(n)) continue;
    index_.emplace(n, static_cast<FamilyId>(names_.size()));
    names_.push_back(std::move(n));
    bindings_.emplace_back(std::nullopt);
  }
}

FamilyUniverse FamilyUniverse::FromFamilies(const std::vector<TraitFamily>& families) {
  FamilyUniverse u;
  auto add = [&u](std::string name, Binding b) {
    if (u.index_.count(name)) {
      throw DependencyError(Code::kUndeclaredFamily, "family name '" + name + "' declared twice");
    }
    u.index_.emplace(name, static_cast<FamilyId>(u.names_.size()));
    u.names_.push_back(std::move(name));
    u.bindings_.emplace_back(b);
  };
  for (size_t f = 0; f < families.size(); ++f) {
    add(families[f].name, Binding{f, std::nullopt});
    for (size_t k = 0; k < families[f].keys.size(); ++k) {
      add(families[f].name + "." + families[f].keys[k], Binding{f, k});
    }
  }
  return u;
}

std::optional<FamilyId> FamilyUniverse::Find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FamilyId FamilyUniverse::Require(std::string_view name) const {
  auto id = Find(name);
  if (!id) {
    throw DependencyError(Code::kUndeclaredFamily,
                          "undeclared family '" + std::string(name) + "'");
  }
  return *id;
}

FamilySet FamilyUniverse::Set(std::initializer_list<std::string_view> names) const {
  FamilySet out;
  for (auto n : names) out.insert(Require(n));
  return out;
}

DependencySet::DependencySet(std::initializer_list<TraitDependency> deps) {
  for (const auto& d : deps) Add(d);
}

bool DependencySet::Add(TraitDependency dep) {
  if (dep.lhs.empty() || dep.rhs.empty()) {
    throw DependencyError(Code::kEmpty, "dependency sides must be non-empty");
  }
  return deps_.insert(std::move(dep)).second;
}

FamilySet Closure(const FamilySet& x, const DependencySet& sigma,
                  const FamilyUniverse& universe) {
  CheckIds(x, universe);
  std::vector<const TraitDependency*> deps;
  deps.reserve(sigma.size());
  for (const auto& d : sigma) {
    CheckIds(d.lhs, universe);
    CheckIds(d.rhs, universe);
    deps.push_back(&d);
  }

  std::vector<size_t> missing(deps.size());
  std::vector<std::vector<size_t>> uses(universe.size());
  for (size_t i = 0; i < deps.size(); ++i) {
    missing[i] = deps[i]->lhs.size();
    for (FamilyId a : deps[i]->lhs) uses[a].push_back(i);
  }

  std::vector<char> in(universe.size(), 0);
  std::deque<FamilyId> queue;
  for (FamilyId a : x) {
    in[a] = 1;
    queue.push_back(a);
  }
  while (!queue.empty()) {
    FamilyId a = queue.front();
    queue.pop_front();
    for (size_t i : uses[a]) {
      if (--missing[i] != 0) continue;
      for (FamilyId b : deps[i]->rhs) {
        if (!in[b]) {
          in[b] = 1;
          queue.push_back(b);
        }
      }
    }
  }

  FamilySet out;
  for (FamilyId a = 0; a < in.size(); ++a) {
    if (in[a]) out.insert(a);
  }
  return out;
}

bool Implies(const DependencySet& sigma, const TraitDependency& fd,
             const FamilyUniverse& universe) {
  CheckIds(fd.rhs, universe);
  FamilySet closure = Closure(fd.lhs, sigma, universe);
  return std::includes(closure.begin(), closure.end(), fd.rhs.begin(), fd.rhs.end());
}

DependencySet ParseDependencies(std::string_view text, const FamilyUniverse& universe) {
  DependencySet out;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (eol == text.size()) break;
      continue;
    }
    size_t arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw DependencyError(Code::kSyntax, Position(line_no, 1) + ": missing '->'");
    }
    if (line.find("->", arrow + 2) != std::string_view::npos) {
      throw DependencyError(Code::kSyntax,
                            Position(line_no, line.find("->", arrow + 2) + 1) +
                                ": more than one '->'");
    }
    TraitDependency dep{ParseSide(line.substr(0, arrow), line_no, 0, universe),
                        ParseSide(line.substr(arrow + 2), line_no, arrow + 2, universe)};
    out.Add(std::move(dep));
    if (eol == text.size()) break;
  }
  return out;
}

DependencySet LoadDependencies(const std::string& path, const FamilyUniverse& universe) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open dependency file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return ParseDependencies(ss.str(), universe);
  } catch (const DependencyError& e) {
    throw DependencyError(e.code(), path + ": " + e.what());
  }
}

std::string FormatDependency(const TraitDependency& fd, const FamilyUniverse& universe) {
  auto side = [&universe](const FamilySet& s) {
    std::string out;
    for (FamilyId id : s) {
      if (!out.empty()) out += ",";
      out += universe.name(id);
    }
    return out;
  };
  return side(fd.lhs) + " -> " + side(fd.rhs);
}

std::vector<Assignment> LinkedAssignments(const PropertyGraph& graph, const TraitCatalog& catalog,
                                          const std::vector<TraitFamily>& families,
                                          const FamilyUniverse& universe) {
  std::map<std::string_view, size_t> family_index;
  for (size_t f = 0; f < families.size(); ++f) family_index[families[f].name] = f;

  std::vector<Assignment> out;
  auto visit = [&](ElementRef element) {
    const auto& out_edges = graph.OutEdges(element);
    std::vector<const TraitEntry*> linked(families.size(), nullptr);
    bool any = false;
    for (EdgeId eid : out_edges) {
      const Edge& e = graph.edge(eid);
      if (e.label != kHasTraitLabel) continue;
      const TraitEntry* entry = catalog.Lookup(e.dst);
      if (!entry) {
        throw NormalizeError(NormalizeError::Code::kInconsistentCatalog,
                             element.ToString() + " links to node:" + std::to_string(e.dst) +
                                 " which is not a catalogued trait");
      }
      auto fi = family_index.find(entry->family);
      if (fi == family_index.end()) continue;
      if (linked[fi->second]) {
        throw DependencyError(Code::kMalformedLinking,
                              element.ToString() + " links to two " + entry->family + " traits");
      }
      linked[fi->second] = entry;
      any = true;
    }
    if (!any) return;
    Assignment a{element, std::vector<std::optional<std::string>>(universe.size())};
    for (FamilyId id = 0; id < universe.size(); ++id) {
      const auto& b = universe.binding(id);
      if (!b || !linked[b->family]) continue;
      const TraitEntry* entry = linked[b->family];
      if (!b->component) {
        a.values[id] = CanonicalTraitKey(entry->family, entry->tuple);
      } else if (*b->component < entry->tuple.size() && entry->tuple[*b->component]) {
        a.values[id] = ValueKey(*entry->tuple[*b->component]);
      }
    }
    out.push_back(std::move(a));
  };
  for (NodeId id : graph.NodeIds()) {
    if (!IsTraitNode(graph, id)) visit(ElementRef::Node(id));
  }
  for (EdgeId id : graph.EdgeIds()) {
    if (graph.edge(id).label != kHasTraitLabel) visit(ElementRef::Edge(id));
  }
  return out;
}

std::vector<Assignment> EmbeddedAssignments(const PropertyGraph& graph,
                                            const std::vector<TraitFamily>& families,
                                            const FamilyUniverse& universe) {
  std::map<ElementRef, std::vector<std::optional<ValueTuple>>> tuples;
  for (size_t f = 0; f < families.size(); ++f) {
    const TraitFamily& family = families[f];
    for (const auto& key : family.keys) {
      for (const KeyedValue& kv : graph.ElementsWithKey(key)) {
        if (!IsDomainElement(graph, kv.element) || !family.InScope(graph, kv.element)) continue;
        auto& slot = tuples[kv.element];
        if (slot.empty()) slot.resize(families.size());
        if (!slot[f]) slot[f] = EmbeddedTuple(graph, kv.element, family);
      }
    }
  }
  std::vector<Assignment> out;
  out.reserve(tuples.size());
  for (const auto& [element, per_family] : tuples) {
    Assignment a{element, std::vector<std::optional<std::string>>(universe.size())};
    for (FamilyId id = 0; id < universe.size(); ++id) {
      const auto& b = universe.binding(id);
      if (!b || !per_family[b->family]) continue;
      const ValueTuple& t = *per_family[b->family];
      if (!b->component) {
        a.values[id] = CanonicalTraitKey(families[b->family].name, t);
      } else if (t[*b->component]) {
        a.values[id] = ValueKey(*t[*b->component]);
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

Verdict Holds(const std::vector<Assignment>& assignments, const TraitDependency& fd,
              const FamilyUniverse& universe) {
  CheckIds(fd.lhs, universe);
  CheckIds(fd.rhs, universe);
  Verdict v;
  v.dependency = FormatDependency(fd, universe);

  struct Group {
    std::set<std::vector<std::string>> ys;
    std::vector<ElementRef> elements;
  };
  std::map<std::vector<std::string>, Group> groups;
  for (const Assignment& a : assignments) {
    std::vector<std::string> x;
    bool complete = true;
    for (FamilyId id : fd.lhs) {
      if (!a.values[id]) {
        complete = false;
        break;
      }
      x.push_back(*a.values[id]);
    }
    if (!complete) {
      ++v.skipped;
      continue;
    }
    ++v.covered;
    std::vector<std::string> y;
    for (FamilyId id : fd.rhs) {
      if (!a.values[id]) {
        complete = false;
        break;
      }
      y.push_back(*a.values[id]);
    }
    if (!complete) {
      v.missing_y.push_back(a.element);
      continue;
    }
    Group& g = groups[x];
    g.ys.insert(std::move(y));
    g.elements.push_back(a.element);
  }
  for (auto& [x, g] : groups) {
    if (g.ys.size() < 2) continue;
    std::sort(g.elements.begin(), g.elements.end());
    v.violations.push_back(Violation{x, {g.ys.begin(), g.ys.end()}, std::move(g.elements)});
  }
  v.satisfied = v.violations.empty();
  return v;
}

Verdict Holds(const PropertyGraph& graph, const TraitCatalog& catalog,
              const std::vector<TraitFamily>& families, const TraitDependency& fd) {
  FamilyUniverse universe = FamilyUniverse::FromFamilies(families);
  return Holds(LinkedAssignments(graph, catalog, families, universe), fd, universe);
}

}  // namespace traitnorm
