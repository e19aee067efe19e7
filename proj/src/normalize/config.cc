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

#include <fstream>
#include <set>

#include "traitnorm/error.h"
#include "traitnorm/normalizer.h"

namespace traitnorm {
namespace {

using Code = NormalizeError::Code;
using nlohmann::json;

const std::set<std::string> kConfigFields = {
    "tau",   "families", "auto_detect",  "allow",
    "deny",  "scope",    "partial_match", "dependencies",
    "atomicity_delimiters"};

std::vector<std::string> StringList(const json& j, const std::string& field) {
  if (!j.is_array()) throw NormalizeError(Code::kConfig, "'" + field + "' must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw NormalizeError(Code::kConfig, "'" + field + "' must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

TraitFamily FamilyFromJson(const json& j) {
  if (!j.is_object()) throw NormalizeError(Code::kConfig, "family entry must be an object");
  for (const auto& [k, v] : j.items()) {
    if (k != "name" && k != "keys" && k != "scope") {
      throw NormalizeError(Code::kConfig, "unknown family field '" + k + "'");
    }
  }
  TraitFamily f;
  if (!j.contains("name") || !j["name"].is_string()) {
    throw NormalizeError(Code::kConfig, "family entry needs a string 'name'");
  }
  f.name = j["name"].get<std::string>();
  if (!j.contains("keys")) throw NormalizeError(Code::kConfig, "family " + f.name + " has no keys");
  f.keys = StringList(j["keys"], "keys");
  if (j.contains("scope")) {
    for (auto& s : StringList(j["scope"], "scope")) f.scope.insert(std::move(s));
  }
  return f;
}

json FamilyToJson(const TraitFamily& f) {
  return json{{"name", f.name}, {"keys", f.keys}, {"scope", json(f.scope)}};
}

}  // namespace

void NormalizerConfig::Validate() const {
  if (tau == 0) throw NormalizeError(Code::kConfig, "tau must be at least 1");
  std::set<std::string> names;
  for (const auto& f : families) {
    ValidateFamily(f);
    if (!names.insert(f.name).second) {
      throw NormalizeError(Code::kConfig, "family " + f.name + " declared twice");
    }
  }
  for (const auto& k : allow) {
    if (deny.count(k)) {
      throw NormalizeError(Code::kConfig, "key '" + k + "' is both allowed and denied");
    }
  }
  for (const auto& d : atomicity_delimiters) {
    if (d.empty()) throw NormalizeError(Code::kConfig, "empty atomicity delimiter");
  }
}

json NormalizerConfig::ToJson() const {
  json fams = json::array();
  for (const auto& f : families) fams.push_back(FamilyToJson(f));
  json j{{"tau", tau},
         {"families", fams},
         {"auto_detect", auto_detect},
         {"allow", json(allow)},
         {"deny", json(deny)},
         {"scope", json(scope)},
         {"partial_match", partial_match},
         {"atomicity_delimiters", atomicity_delimiters}};
  if (dependency_file) j["dependencies"] = dependency_file->string();
  return j;
}

NormalizerConfig NormalizerConfig::FromJson(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw NormalizeError(Code::kConfig, "config must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (!kConfigFields.count(k)) throw NormalizeError(Code::kConfig, "unknown config field '" + k + "'");
  }
  NormalizerConfig c;
  try {
    if (j.contains("tau")) {
      if (!j["tau"].is_number_integer() || j["tau"].get<int64_t>() < 1) {
        throw NormalizeError(Code::kConfig, "tau must be a positive integer");
      }
      c.tau = j["tau"].get<uint64_t>();
    }
    if (j.contains("families")) {
      if (!j["families"].is_array()) throw NormalizeError(Code::kConfig, "'families' must be an array");
      for (const auto& f : j["families"]) c.families.push_back(FamilyFromJson(f));
    }
    if (j.contains("auto_detect")) c.auto_detect = j["auto_detect"].get<bool>();
    if (j.contains("partial_match")) c.partial_match = j["partial_match"].get<bool>();
    if (j.contains("allow")) {
      for (auto& s : StringList(j["allow"], "allow")) c.allow.insert(std::move(s));
    }
    if (j.contains("deny")) {
      for (auto& s : StringList(j["deny"], "deny")) c.deny.insert(std::move(s));
    }
    if (j.contains("scope")) {
      for (auto& s : StringList(j["scope"], "scope")) c.scope.insert(std::move(s));
    }
    if (j.contains("atomicity_delimiters")) {
      c.atomicity_delimiters = StringList(j["atomicity_delimiters"], "atomicity_delimiters");
    }
    if (j.contains("dependencies")) {
      std::filesystem::path p = j["dependencies"].get<std::string>();
      c.dependency_file = p.is_absolute() || base_dir.empty() ? p : base_dir / p;
    }
  } catch (const json::exception& e) {
    throw NormalizeError(Code::kConfig, std::string("config: ") + e.what());
  }
  c.Validate();
  return c;
}

NormalizerConfig NormalizerConfig::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NormalizeError(Code::kConfig, "cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw NormalizeError(Code::kConfig, path.string() + ": " + e.what());
  }
  return FromJson(j, path.parent_path());
}

}  // namespace traitnorm
