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

#include "traitnorm/value.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "traitnorm/error.h"

namespace traitnorm {
namespace {

bool IsLeap(int32_t y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int DaysInMonth(int32_t y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && IsLeap(y) ? 29 : kDays[m - 1];
}

template <typename T>
bool ParseWhole(std::string_view s, T& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<Date> Date::Parse(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  int32_t y = 0;
  int m = 0, d = 0;
  if (!ParseWhole(text.substr(0, 4), y) || !ParseWhole(text.substr(5, 2), m) ||
      !ParseWhole(text.substr(8, 2), d)) {
    return std::nullopt;
  }
  if (m < 1 || m > 12 || d < 1 || d > DaysInMonth(y, m)) return std::nullopt;
  return Date{y, static_cast<uint8_t>(m), static_cast<uint8_t>(d)};
}

std::string Date::ToString() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::string_view ValueTypeName(ValueType type) {
  switch (type) {
    case ValueType::kText: return "text";
    case ValueType::kInteger: return "integer";
    case ValueType::kDecimal: return "decimal";
    case ValueType::kBoolean: return "boolean";
    case ValueType::kDate: return "date";
  }
  return "text";
}

std::optional<ValueType> ParseValueType(std::string_view name) {
  for (ValueType t : {ValueType::kText, ValueType::kInteger, ValueType::kDecimal,
                      ValueType::kBoolean, ValueType::kDate}) {
    if (ValueTypeName(t) == name) return t;
  }
  return std::nullopt;
}

PropertyValue::PropertyValue(double v) : value_(v) {
  if (!std::isfinite(v)) throw std::invalid_argument("decimal property must be finite");
}

std::string PropertyValue::ToString() const {
  switch (type()) {
    case ValueType::kText: return as_text();
    case ValueType::kInteger: return std::to_string(as_integer());
    case ValueType::kDecimal: {
      char buf[32];
      auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), as_decimal());
      return std::string(buf, p);
    }
    case ValueType::kBoolean: return as_boolean() ? "true" : "false";
    case ValueType::kDate: return as_date().ToString();
  }
  return {};
}

std::optional<PropertyValue> PropertyValue::Coerce(std::string_view text, ValueType type) {
  switch (type) {
    case ValueType::kText:
      return PropertyValue(std::string(text));
    case ValueType::kInteger: {
      int64_t v = 0;
      if (!ParseWhole(Trim(text), v)) return std::nullopt;
      return PropertyValue(v);
    }
    case ValueType::kDecimal: {
      std::string_view t = Trim(text);
      double v = 0;
      if (!ParseWhole(t, v) || !std::isfinite(v)) return std::nullopt;
      return PropertyValue(v);
    }
    case ValueType::kBoolean: {
      std::string_view t = Trim(text);
      if (t == "true" || t == "1" || t == "TRUE" || t == "True") return PropertyValue(true);
      if (t == "false" || t == "0" || t == "FALSE" || t == "False") return PropertyValue(false);
      return std::nullopt;
    }
    case ValueType::kDate: {
      auto d = Date::Parse(Trim(text));
      if (!d) return std::nullopt;
      return PropertyValue(*d);
    }
  }
  return std::nullopt;
}

nlohmann::json PropertyValue::ToJson() const {
  switch (type()) {
    case ValueType::kText: return as_text();
    case ValueType::kInteger: return as_integer();
    case ValueType::kDecimal: return as_decimal();
    case ValueType::kBoolean: return as_boolean();
    case ValueType::kDate: return nlohmann::json{{"date", as_date().ToString()}};
  }
  return nullptr;
}

PropertyValue PropertyValue::FromJson(const nlohmann::json& j) {
  using Code = GraphError::Code;
  switch (j.type()) {
    case nlohmann::json::value_t::string: return PropertyValue(j.get<std::string>());
    case nlohmann::json::value_t::boolean: return PropertyValue(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return PropertyValue(j.get<int64_t>());
    case nlohmann::json::value_t::number_unsigned: {
      auto u = j.get<uint64_t>();
      if (u > static_cast<uint64_t>(INT64_MAX)) {
        throw GraphError(Code::kNonScalarValue, "integer property out of range");
      }
      return PropertyValue(static_cast<int64_t>(u));
    }
    case nlohmann::json::value_t::number_float: return PropertyValue(j.get<double>());
    case nlohmann::json::value_t::object: {
      if (j.size() == 1 && j.contains("date") && j["date"].is_string()) {
        if (auto d = Date::Parse(j["date"].get<std::string>())) return PropertyValue(*d);
      }
      throw GraphError(Code::kNonScalarValue, "structured property value: " + j.dump());
    }
    case nlohmann::json::value_t::array:
      throw GraphError(Code::kNonScalarValue, "list property value: " + j.dump());
    default:
      throw GraphError(Code::kNonScalarValue, "unsupported property value: " + j.dump());
  }
}

std::strong_ordering operator<=>(const PropertyValue& a, const PropertyValue& b) {
  if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
  switch (a.type()) {
    case ValueType::kText: return a.as_text().compare(b.as_text()) <=> 0;
    case ValueType::kInteger: return a.as_integer() <=> b.as_integer();
    case ValueType::kDecimal: {
      // Finite by construction, so this is a total order.
      double x = a.as_decimal(), y = b.as_decimal();
      if (x < y) return std::strong_ordering::less;
      if (y < x) return std::strong_ordering::greater;
      return std::strong_ordering::equal;
    }
    case ValueType::kBoolean: return a.as_boolean() <=> b.as_boolean();
    case ValueType::kDate: return a.as_date() <=> b.as_date();
  }
  return std::strong_ordering::equal;
}

size_t PropertyValue::Hash() const {
  size_t h = std::hash<size_t>{}(value_.index()) * 0x9e3779b97f4a7c15ULL;
  switch (type()) {
    case ValueType::kText: return h ^ std::hash<std::string>{}(as_text());
    case ValueType::kInteger: return h ^ std::hash<int64_t>{}(as_integer());
    case ValueType::kDecimal: return h ^ std::hash<double>{}(as_decimal());
    case ValueType::kBoolean: return h ^ std::hash<bool>{}(as_boolean());
    case ValueType::kDate: {
      const Date& d = as_date();
      return h ^ std::hash<int64_t>{}(int64_t{d.year} * 512 + d.month * 32 + d.day);
    }
  }
  return h;
}

}  // namespace traitnorm
