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

#include <cctype>
#include <fstream>
#include <sstream>

#include "traitnorm/error.h"
#include "traitnorm/query.h"

namespace traitnorm {
namespace {

struct SExpr {
  bool is_list = false;
  bool quoted = false;
  std::string atom;
  std::vector<SExpr> items;
  size_t line = 1;
  size_t col = 1;

  std::string where() const { return std::to_string(line) + ":" + std::to_string(col); }
  bool is_atom(std::string_view s) const { return !is_list && !quoted && atom == s; }
};

[[noreturn]] void Fail(const SExpr& at, const std::string& what) {
  throw QueryError(at.where() + ": " + what);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> ReadAll() {
    std::vector<SExpr> out;
    SkipSpace();
    while (pos_ < text_.size()) {
      out.push_back(Read());
      SkipSpace();
    }
    return out;
  }

 private:
  [[noreturn]] void Error(const std::string& what) const {
    throw QueryError(std::to_string(line_) + ":" + std::to_string(col_) + ": " + what);
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else {
        break;
      }
    }
  }

  SExpr Read() {
    SExpr e;
    e.line = line_;
    e.col = col_;
    char c = text_[pos_];
    if (c == ')') Error("unexpected ')'");
    if (c == '(') {
      Advance();
      e.is_list = true;
      while (true) {
        SkipSpace();
        if (pos_ >= text_.size()) {
          throw QueryError(e.where() + ": unclosed '('");
        }
        if (text_[pos_] == ')') {
          Advance();
          return e;
        }
        e.items.push_back(Read());
      }
    }
    if (c == '"') {
      Advance();
      e.quoted = true;
      while (true) {
        if (pos_ >= text_.size()) throw QueryError(e.where() + ": unterminated string");
        char d = text_[pos_];
        if (d == '"') {
          Advance();
          return e;
        }
        if (d == '\\') {
          Advance();
          if (pos_ >= text_.size()) throw QueryError(e.where() + ": unterminated string");
          d = text_[pos_];
        }
        e.atom += d;
        Advance();
      }
    }
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';' ||
          d == '"') {
        break;
      }
      e.atom += d;
      Advance();
    }
    return e;
  }

  std::string_view text_;
  size_t pos_ = 0;
  size_t line_ = 1;
  size_t col_ = 1;
};

const std::string& Atom(const SExpr& e, const char* what) {
  if (e.is_list || e.quoted || e.atom.empty()) Fail(e, std::string("expected ") + what);
  return e.atom;
}

bool IsIdentifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

PropertyRef ParseRef(const SExpr& e) {
  const std::string& a = Atom(e, "variable or variable.key");
  PropertyRef r;
  size_t dot = a.find('.');
  r.var = a.substr(0, dot);
  if (dot != std::string::npos) r.key = a.substr(dot + 1);
  if (!IsIdentifier(r.var) || (r.key && r.key->empty())) Fail(e, "malformed reference '" + a + "'");
  return r;
}

std::optional<PropertyValue> ParseLiteral(const SExpr& e) {
  if (e.is_list) return std::nullopt;
  if (e.quoted) return PropertyValue(e.atom);
  if (e.atom == "true") return PropertyValue(true);
  if (e.atom == "false") return PropertyValue(false);
  if (auto i = PropertyValue::Coerce(e.atom, ValueType::kInteger)) return i;
  if (auto d = PropertyValue::Coerce(e.atom, ValueType::kDecimal)) return d;
  return std::nullopt;
}

Condition ParseCondition(const SExpr& e) {
  if (!e.is_list || e.items.size() != 3 || !e.items[0].is_atom("=")) {
    Fail(e, "expected (= lhs rhs)");
  }
  Condition c;
  c.lhs = ParseRef(e.items[1]);
  if (auto lit = ParseLiteral(e.items[2])) {
    c.rhs = std::move(*lit);
  } else {
    c.rhs = ParseRef(e.items[2]);
  }
  return c;
}

void Arity(const SExpr& e, size_t min, size_t max) {
  if (e.items.size() < min || e.items.size() > max) {
    Fail(e, "wrong number of arguments to " + e.items[0].atom);
  }
}

PlanPtr Build(const SExpr& e) {
  if (!e.is_list || e.items.empty()) Fail(e, "expected an operator list");
  const std::string& op = Atom(e.items[0], "operator name");
  auto node = std::make_shared<PlanNode>();
  using Kind = PlanNode::Kind;
  if (op == "scan") {
    Arity(e, 3, 3);
    node->kind = Kind::kScan;
    node->var = Atom(e.items[1], "variable");
    node->label = Atom(e.items[2], "label");
    if (!IsIdentifier(node->var)) Fail(e.items[1], "bad variable name");
  } else if (op == "filter") {
    if (e.items.size() < 3) Fail(e, "filter needs a plan and a condition");
    node->kind = Kind::kFilter;
    node->inputs.push_back(Build(e.items[1]));
    for (size_t i = 2; i < e.items.size(); ++i) node->conditions.push_back(ParseCondition(e.items[i]));
  } else if (op == "expand") {
    Arity(e, 6, 7);
    node->kind = Kind::kExpand;
    node->inputs.push_back(Build(e.items[1]));
    node->var = Atom(e.items[2], "source variable");
    const std::string& dir = Atom(e.items[3], "-> or <-");
    if (dir != "->" && dir != "<-") Fail(e.items[3], "direction must be -> or <-");
    node->outgoing = dir == "->";
    node->label = Atom(e.items[4], "edge label");
    node->to = Atom(e.items[5], "target variable");
    if (!IsIdentifier(node->to)) Fail(e.items[5], "bad variable name");
    if (e.items.size() == 7) node->target_label = Atom(e.items[6], "target label");
  } else if (op == "join") {
    if (e.items.size() < 4) Fail(e, "join needs two plans and at least one equality");
    node->kind = Kind::kJoin;
    node->inputs.push_back(Build(e.items[1]));
    node->inputs.push_back(Build(e.items[2]));
    for (size_t i = 3; i < e.items.size(); ++i) {
      Condition c = ParseCondition(e.items[i]);
      if (!std::holds_alternative<PropertyRef>(c.rhs)) Fail(e.items[i], "join equalities compare references");
      node->conditions.push_back(std::move(c));
    }
  } else if (op == "product") {
    Arity(e, 3, 3);
    node->kind = Kind::kProduct;
    node->inputs.push_back(Build(e.items[1]));
    node->inputs.push_back(Build(e.items[2]));
  } else if (op == "project") {
    if (e.items.size() < 3) Fail(e, "project needs at least one column");
    node->kind = Kind::kProject;
    node->inputs.push_back(Build(e.items[1]));
    for (size_t i = 2; i < e.items.size(); ++i) node->columns.push_back(ParseRef(e.items[i]));
  } else if (op == "aggregate") {
    Arity(e, 4, 4);
    node->kind = Kind::kAggregate;
    node->inputs.push_back(Build(e.items[1]));
    const SExpr& group = e.items[2];
    if (!group.is_list || group.items.empty() || !group.items[0].is_atom("group")) {
      Fail(group, "expected (group ref ...)");
    }
    for (size_t i = 1; i < group.items.size(); ++i) node->columns.push_back(ParseRef(group.items[i]));
    const SExpr& agg = e.items[3];
    if (agg.is_list && agg.items.size() == 1 && agg.items[0].is_atom("count")) {
      node->collect.reset();
    } else if (agg.is_list && agg.items.size() == 2 && agg.items[0].is_atom("collect")) {
      node->collect = ParseRef(agg.items[1]);
    } else {
      Fail(agg, "expected (count) or (collect ref)");
    }
  } else {
    Fail(e.items[0], "unknown operator '" + op + "'");
  }
  return node;
}

std::string FormatValue(const PropertyValue& v) {
  switch (v.type()) {
    case ValueType::kText:
      return nlohmann::json(v.as_text()).dump();
    case ValueType::kBoolean:
      return v.as_boolean() ? "true" : "false";
    default:
      return v.ToString();
  }
}

std::string FormatCondition(const Condition& c) {
  std::string rhs = std::holds_alternative<PropertyRef>(c.rhs)
                        ? std::get<PropertyRef>(c.rhs).ToString()
                        : FormatValue(std::get<PropertyValue>(c.rhs));
  return "(= " + c.lhs.ToString() + " " + rhs + ")";
}

}  // namespace

PlanPtr ParsePlan(std::string_view text) {
  std::vector<SExpr> forms = Reader(text).ReadAll();
  if (forms.size() != 1) throw QueryError("expected exactly one plan");
  return Build(forms.front());
}

std::string FormatPlan(const PlanNode& p) {
  using Kind = PlanNode::Kind;
  std::string out;
  switch (p.kind) {
    case Kind::kScan:
      return "(scan " + p.var + " " + p.label + ")";
    case Kind::kFilter:
      out = "(filter " + FormatPlan(*p.inputs[0]);
      for (const auto& c : p.conditions) out += " " + FormatCondition(c);
      return out + ")";
    case Kind::kExpand:
      out = "(expand " + FormatPlan(*p.inputs[0]) + " " + p.var + (p.outgoing ? " -> " : " <- ") +
            p.label + " " + p.to;
      if (p.target_label) out += " " + *p.target_label;
      return out + ")";
    case Kind::kJoin:
      out = "(join " + FormatPlan(*p.inputs[0]) + " " + FormatPlan(*p.inputs[1]);
      for (const auto& c : p.conditions) out += " " + FormatCondition(c);
      return out + ")";
    case Kind::kProduct:
      return "(product " + FormatPlan(*p.inputs[0]) + " " + FormatPlan(*p.inputs[1]) + ")";
    case Kind::kProject:
      out = "(project " + FormatPlan(*p.inputs[0]);
      for (const auto& c : p.columns) out += " " + c.ToString();
      return out + ")";
    case Kind::kAggregate:
      out = "(aggregate " + FormatPlan(*p.inputs[0]) + " (group";
      for (const auto& c : p.columns) out += " " + c.ToString();
      out += ") ";
      out += p.collect ? "(collect " + p.collect->ToString() + ")" : std::string("(count)");
      return out + ")";
  }
  return out;
}

std::vector<WorkloadTest> ParseWorkload(std::string_view text) {
  std::vector<WorkloadTest> tests;
  std::set<std::string> names;
  for (const SExpr& form : Reader(text).ReadAll()) {
    if (!form.is_list || form.items.size() < 5 || !form.items[0].is_atom("test")) {
      Fail(form, "expected (test NAME \"purpose\" [(flags ...)] (embedded PLAN) (trait PLAN))");
    }
    WorkloadTest t;
    t.name = Atom(form.items[1], "test name");
    if (!names.insert(t.name).second) Fail(form.items[1], "duplicate test '" + t.name + "'");
    if (!form.items[2].quoted) Fail(form.items[2], "expected a quoted purpose");
    t.purpose = form.items[2].atom;
    for (size_t i = 3; i < form.items.size(); ++i) {
      const SExpr& part = form.items[i];
      if (!part.is_list || part.items.empty()) Fail(part, "expected a test clause");
      const std::string& head = Atom(part.items[0], "clause name");
      if (head == "flags") {
        for (size_t k = 1; k < part.items.size(); ++k) t.flags.insert(Atom(part.items[k], "flag"));
      } else if (head == "embedded" || head == "trait") {
        if (part.items.size() != 2) Fail(part, head + " takes one plan");
        (head == "embedded" ? t.embedded : t.trait) = Build(part.items[1]);
      } else {
        Fail(part.items[0], "unknown clause '" + head + "'");
      }
    }
    if (!t.embedded || !t.trait) Fail(form, "test " + t.name + " needs both plan forms");
    tests.push_back(std::move(t));
  }
  return tests;
}

std::vector<WorkloadTest> LoadWorkload(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw QueryError("cannot open workload " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return ParseWorkload(ss.str());
  } catch (const QueryError& e) {
    throw QueryError(path + ":" + e.what());
  }
}

}  // namespace traitnorm
