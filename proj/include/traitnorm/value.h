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

#ifndef TRAITNORM_VALUE_H_
#define TRAITNORM_VALUE_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

namespace traitnorm {

// Calendar date without time zone. Always a valid proleptic Gregorian date.
struct Date {
  int32_t year = 1970;
  uint8_t month = 1;
  uint8_t day = 1;

  // Parses YYYY-MM-DD. Returns nullopt for malformed or impossible dates.
  static std::optional<Date> Parse(std::string_view text);
  std::string ToString() const;

  friend auto operator<=>(const Date&, const Date&) = default;
};

enum class ValueType : uint8_t { kText, kInteger, kDecimal, kBoolean, kDate };

std::string_view ValueTypeName(ValueType type);
std::optional<ValueType> ParseValueType(std::string_view name);

// A scalar property value. There is no null alternative: absence of a key is
// the only representation of "no value", and there are no collection types,
// so every stored value is atomic.
class PropertyValue {
 public:
  PropertyValue() : value_(std::string()) {}
  PropertyValue(std::string v) : value_(std::move(v)) {}
  PropertyValue(const char* v) : value_(std::string(v)) {}
  PropertyValue(int64_t v) : value_(v) {}
  PropertyValue(int v) : value_(static_cast<int64_t>(v)) {}
  // Rejects NaN and infinities with std::invalid_argument.
  PropertyValue(double v);
  PropertyValue(bool v) : value_(v) {}
  PropertyValue(Date v) : value_(v) {}

  ValueType type() const { return static_cast<ValueType>(value_.index()); }

  bool is_text() const { return type() == ValueType::kText; }
  const std::string& as_text() const { return std::get<std::string>(value_); }
  int64_t as_integer() const { return std::get<int64_t>(value_); }
  double as_decimal() const { return std::get<double>(value_); }
  bool as_boolean() const { return std::get<bool>(value_); }
  const Date& as_date() const { return std::get<Date>(value_); }

  // Human-readable rendering without type decoration.
  std::string ToString() const;

  // Coerces a raw text cell into `type`. Returns nullopt if the text does not
  // parse as that type.
  static std::optional<PropertyValue> Coerce(std::string_view text, ValueType type);

  // JSON encoding used by dumps and reports. Dates are tagged objects
  // {"date": "YYYY-MM-DD"} so they survive a round trip.
  nlohmann::json ToJson() const;
  // Throws GraphError(kNonScalarValue) for arrays, null, untagged objects.
  static PropertyValue FromJson(const nlohmann::json& j);

  friend bool operator==(const PropertyValue& a, const PropertyValue& b) {
    return a.value_ == b.value_;
  }
  // Total order: by type first, then by value.
  friend std::strong_ordering operator<=>(const PropertyValue& a, const PropertyValue& b);

  size_t Hash() const;

 private:
  std::variant<std::string, int64_t, double, bool, Date> value_;
};

using PropertyMap = std::map<std::string, PropertyValue, std::less<>>;

}  // namespace traitnorm

template <>
struct std::hash<traitnorm::PropertyValue> {
  size_t operator()(const traitnorm::PropertyValue& v) const noexcept { return v.Hash(); }
};

#endif  // TRAITNORM_VALUE_H_
