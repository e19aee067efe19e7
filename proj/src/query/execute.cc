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
#include <map>

#include "traitnorm/error.h"
#include "traitnorm/query.h"

namespace traitnorm {
namespace {

using Kind = PlanNode::Kind;
using nlohmann::json;

struct Table {
  std::vector<std::string> vars;
  std::vector<std::vector<NodeId>> rows;

  size_t Slot(const std::string& var) const {
    return std::find(vars.begin(), vars.end(), var) - vars.begin();
  }
};

const char* OpName(Kind k) {
  switch (k) {
    case Kind::kScan: return "scan";
    case Kind::kFilter: return "filter";
    case Kind::kExpand: return "expand";
    case Kind::kJoin: return "join";
    case Kind::kProduct: return "product";
    case Kind::kProject: return "project";
    case Kind::kAggregate: return "aggregate";
  }
  return "?";
}

// Returns the variables bound by `p`, rejecting malformed trees.
std::vector<std::string> Check(const PlanNode& p, const PropertyGraph& graph, bool validate,
                               bool is_root) {
  auto require_label = [&](const std::string& label, bool edge) {
    if (!validate) return;
    bool known = edge ? !graph.EdgesWithLabel(label).empty() : !graph.NodesWithLabel(label).empty();
    if (!known) throw QueryError(std::string("unknown ") + (edge ? "edge" : "node") + " label '" + label + "'");
  };
  auto require_ref = [&](const PropertyRef& r, const std::vector<std::string>& vars) {
    if (std::find(vars.begin(), vars.end(), r.var) == vars.end()) {
      throw QueryError("unbound variable '" + r.var + "' in " + OpName(p.kind));
    }
    if (validate && r.key && graph.KeyCount(*r.key) == 0) {
      throw QueryError("unknown property key '" + *r.key + "'");
    }
  };
  if ((p.kind == Kind::kProject || p.kind == Kind::kAggregate) && !is_root) {
    throw QueryError(std::string(OpName(p.kind)) + " must be the root operator");
  }

  std::vector<std::string> vars;
  switch (p.kind) {
    case Kind::kScan:
      require_label(p.label, false);
      return {p.var};
    case Kind::kExpand:
      vars = Check(*p.inputs[0], graph, validate, false);
      require_ref(PropertyRef{p.var, std::nullopt}, vars);
      require_label(p.label, true);
      if (p.target_label) require_label(*p.target_label, false);
      if (std::find(vars.begin(), vars.end(), p.to) != vars.end()) {
        throw QueryError("variable '" + p.to + "' bound twice");
      }
      vars.push_back(p.to);
      return vars;
    case Kind::kJoin:
    case Kind::kProduct: {
      vars = Check(*p.inputs[0], graph, validate, false);
      std::vector<std::string> right = Check(*p.inputs[1], graph, validate, false);
      for (const auto& v : right) {
        if (std::find(vars.begin(), vars.end(), v) != vars.end()) {
          throw QueryError("variable '" + v + "' bound on both sides of " + OpName(p.kind));
        }
      }
      for (const Condition& c : p.conditions) {
        const PropertyRef& r = std::get<PropertyRef>(c.rhs);
        bool lhs_left = std::find(vars.begin(), vars.end(), c.lhs.var) != vars.end();
        bool rhs_left = std::find(vars.begin(), vars.end(), r.var) != vars.end();
        if (lhs_left == rhs_left) throw QueryError("join equality must compare the two sides");
        require_ref(c.lhs, lhs_left ? vars : right);
        require_ref(r, rhs_left ? vars : right);
        if (c.lhs.key.has_value() != r.key.has_value()) {
          throw QueryError("join compares an element with a property");
        }
      }
      vars.insert(vars.end(), right.begin(), right.end());
      return vars;
    }
    case Kind::kFilter:
    case Kind::kProject:
    case Kind::kAggregate:
      vars = Check(*p.inputs[0], graph, validate, false);
      for (const Condition& c : p.conditions) {
        require_ref(c.lhs, vars);
        if (const auto* r = std::get_if<PropertyRef>(&c.rhs)) {
          require_ref(*r, vars);
          if (c.lhs.key.has_value() != r->key.has_value()) {
            throw QueryError("filter compares an element with a property");
          }
        } else if (!c.lhs.key) {
          throw QueryError("filter compares an element with a literal");
        }
      }
      for (const auto& col : p.columns) require_ref(col, vars);
      if (p.collect) require_ref(*p.collect, vars);
      return vars;
  }
  return vars;
}

class Executor {
 public:
  Executor(const PropertyGraph& graph, QueryStats& stats) : graph_(graph), stats_(stats) {}

  Table Run(const PlanNode& p) {
    switch (p.kind) {
      case Kind::kScan: return Scan(p);
      case Kind::kFilter: return Filter(p);
      case Kind::kExpand: return Expand(p);
      case Kind::kJoin: return Join(p);
      case Kind::kProduct: return Product(p);
      default: break;
    }
    throw QueryError("project and aggregate must be the root operator");
  }

  std::vector<json> Finish(const PlanNode& p) {
    std::vector<json> out;
    if (p.kind == Kind::kProject) {
      Table in = Run(*p.inputs[0]);
      size_t before = accesses_;
      for (const auto& row : in.rows) {
        json r = json::array();
        for (const auto& col : p.columns) r.push_back(Value(in, row, col));
        out.push_back(std::move(r));
      }
      Trace(p.kind, out.size(), before);
    } else if (p.kind == Kind::kAggregate) {
      Table in = Run(*p.inputs[0]);
      size_t before = accesses_;
      std::map<json, std::vector<json>, JsonLess> groups;
      std::map<json, size_t, JsonLess> counts;
      for (const auto& row : in.rows) {
        json key = json::array();
        for (const auto& col : p.columns) key.push_back(Value(in, row, col));
        ++counts[key];
        auto& bucket = groups[key];
        if (p.collect) {
          json v = Value(in, row, *p.collect);
          if (!v.is_null()) bucket.push_back(std::move(v));
        }
      }
      for (auto& [key, bucket] : groups) {
        json r = key;
        if (p.collect) {
          std::sort(bucket.begin(), bucket.end(), JsonLess());
          r.push_back(bucket);
        } else {
          r.push_back(counts[key]);
        }
        out.push_back(std::move(r));
      }
      Trace(p.kind, out.size(), before);
    } else {
      Table t = Run(p);
      for (const auto& row : t.rows) {
        json r = json::array();
        for (NodeId id : row) r.push_back("node:" + std::to_string(id));
        out.push_back(std::move(r));
      }
    }
    std::sort(out.begin(), out.end(), JsonLess());
    return out;
  }

  size_t accesses() const { return accesses_; }

 private:
  void Trace(Kind k, size_t rows, size_t before) {
    stats_.trace.push_back({std::string(OpName(k)), rows, accesses_ - before});
  }

  const PropertyValue* Read(NodeId id, const std::string& key) {
    ++accesses_;
    return graph_.property(ElementRef::Node(id), key);
  }

  json Value(const Table& t, const std::vector<NodeId>& row, const PropertyRef& ref) {
    NodeId id = row[t.Slot(ref.var)];
    if (!ref.key) return "node:" + std::to_string(id);
    const PropertyValue* v = Read(id, *ref.key);
    return v ? v->ToJson() : json(nullptr);
  }

  // Key component for equality: element id, or the property value.
  std::optional<PropertyValue> KeyPart(const Table& t, const std::vector<NodeId>& row,
                                       const PropertyRef& ref) {
    NodeId id = row[t.Slot(ref.var)];
    if (!ref.key) return PropertyValue(static_cast<int64_t>(id));
    const PropertyValue* v = Read(id, *ref.key);
    if (!v) return std::nullopt;
    return *v;
  }

  Table Scan(const PlanNode& p) {
    size_t before = accesses_;
    ++accesses_;  // label index probe
    Table t{{p.var}, {}};
    for (NodeId id : graph_.NodesWithLabel(p.label)) {
      ++accesses_;
      t.rows.push_back({id});
    }
    Trace(p.kind, t.rows.size(), before);
    return t;
  }

  Table Filter(const PlanNode& p) {
    Table in = Run(*p.inputs[0]);
    size_t before = accesses_;
    Table out{in.vars, {}};
    for (auto& row : in.rows) {
      bool keep = true;
      for (const Condition& c : p.conditions) {
        std::optional<PropertyValue> lhs = KeyPart(in, row, c.lhs);
        if (!lhs) {
          keep = false;
          break;
        }
        if (const auto* r = std::get_if<PropertyRef>(&c.rhs)) {
          std::optional<PropertyValue> rhs = KeyPart(in, row, *r);
          keep = rhs && *rhs == *lhs;
        } else {
          keep = std::get<PropertyValue>(c.rhs) == *lhs;
        }
        if (!keep) break;
      }
      if (keep) out.rows.push_back(std::move(row));
    }
    Trace(p.kind, out.rows.size(), before);
    return out;
  }

  Table Expand(const PlanNode& p) {
    Table in = Run(*p.inputs[0]);
    size_t before = accesses_;
    Table out{in.vars, {}};
    out.vars.push_back(p.to);
    const size_t slot = in.Slot(p.var);
    for (const auto& row : in.rows) {
      const Node& n = graph_.node(row[slot]);
      for (EdgeId eid : p.outgoing ? n.out : n.in) {
        const Edge& e = graph_.edge(eid);
        if (e.label != p.label) continue;
        ++accesses_;  // edge fetch
        if (!p.outgoing && !e.src.is_node()) continue;
        NodeId other = p.outgoing ? e.dst : e.src.id;
        ++accesses_;  // node fetch
        if (p.target_label && !graph_.node(other).has_label(*p.target_label)) continue;
        auto r = row;
        r.push_back(other);
        out.rows.push_back(std::move(r));
      }
    }
    Trace(p.kind, out.rows.size(), before);
    return out;
  }

  Table Join(const PlanNode& p) {
    Table left = Run(*p.inputs[0]);
    Table right = Run(*p.inputs[1]);
    size_t before = accesses_;
    std::vector<PropertyRef> lrefs;
    std::vector<PropertyRef> rrefs;
    for (const Condition& c : p.conditions) {
      const PropertyRef& r = std::get<PropertyRef>(c.rhs);
      bool lhs_left = left.Slot(c.lhs.var) < left.vars.size();
      lrefs.push_back(lhs_left ? c.lhs : r);
      rrefs.push_back(lhs_left ? r : c.lhs);
    }
    auto key_of = [this](const Table& t, const std::vector<NodeId>& row,
                         const std::vector<PropertyRef>& refs)
        -> std::optional<std::vector<PropertyValue>> {
      std::vector<PropertyValue> key;
      for (const auto& ref : refs) {
        auto v = KeyPart(t, row, ref);
        if (!v) return std::nullopt;
        key.push_back(std::move(*v));
      }
      return key;
    };
    std::map<std::vector<PropertyValue>, std::vector<size_t>> build;
    for (size_t i = 0; i < right.rows.size(); ++i) {
      if (auto k = key_of(right, right.rows[i], rrefs)) build[*k].push_back(i);
    }
    Table out{left.vars, {}};
    out.vars.insert(out.vars.end(), right.vars.begin(), right.vars.end());
    for (const auto& row : left.rows) {
      auto k = key_of(left, row, lrefs);
      if (!k) continue;
      auto it = build.find(*k);
      if (it == build.end()) continue;
      for (size_t i : it->second) {
        auto r = row;
        r.insert(r.end(), right.rows[i].begin(), right.rows[i].end());
        out.rows.push_back(std::move(r));
      }
    }
    Trace(p.kind, out.rows.size(), before);
    return out;
  }

  Table Product(const PlanNode& p) {
    Table left = Run(*p.inputs[0]);
    Table right = Run(*p.inputs[1]);
    size_t before = accesses_;
    stats_.cartesian = true;
    Table out{left.vars, {}};
    out.vars.insert(out.vars.end(), right.vars.begin(), right.vars.end());
    for (const auto& l : left.rows) {
      for (const auto& r : right.rows) {
        auto row = l;
        row.insert(row.end(), r.begin(), r.end());
        out.rows.push_back(std::move(row));
      }
    }
    Trace(p.kind, out.rows.size(), before);
    return out;
  }

  const PropertyGraph& graph_;
  QueryStats& stats_;
  size_t accesses_ = 0;
};

}  // namespace

bool JsonLess::operator()(const json& a, const json& b) const {
  auto rank = [](const json& v) {
    if (v.is_null()) return 0;
    if (v.is_boolean()) return 1;
    if (v.is_number()) return 2;
    if (v.is_string()) return 3;
    if (v.is_array()) return 4;
    return 5;
  };
  const int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb;
  switch (ra) {
    case 0: return false;
    case 1: return a.get<bool>() < b.get<bool>();
    case 2:
      if (a.is_number_integer() && b.is_number_integer()) {
        const bool na = !a.is_number_unsigned() && a.get<int64_t>() < 0;
        const bool nb = !b.is_number_unsigned() && b.get<int64_t>() < 0;
        if (na || nb) return na && nb ? a.get<int64_t>() < b.get<int64_t>() : na;
        return a.get<uint64_t>() < b.get<uint64_t>();
      }
      return a.get<double>() < b.get<double>();
    case 3: return a.get_ref<const std::string&>() < b.get_ref<const std::string&>();
    case 4:
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), JsonLess());
    default: return a.dump() < b.dump();
  }
}

QueryResult Execute(const PlanNode& plan, const PropertyGraph& graph,
                    const ExecuteOptions& options) {
  Check(plan, graph, options.validate, true);
  QueryResult result;
  auto start = std::chrono::steady_clock::now();
  Executor exec(graph, result.stats);
  result.rows = exec.Finish(plan);
  result.stats.wall = std::chrono::steady_clock::now() - start;
  result.stats.accesses = exec.accesses();
  result.stats.rows = result.rows.size();
  return result;
}

}  // namespace traitnorm
