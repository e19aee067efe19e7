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

#include <exception>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "traitnorm/error.h"
#include "traitnorm/ingest.h"

namespace traitnorm {
namespace {

using Code = IngestError::Code;
using nlohmann::json;

std::string RequireString(const json& j, const char* field, const std::string& where) {
  if (!j.is_object() || !j.contains(field) || !j[field].is_string()) {
    throw IngestError(Code::kMapping, where + ": missing string field '" + field + "'");
  }
  return j[field].get<std::string>();
}

ColumnTypes TypesFromJson(const json& j, const std::string& where) {
  ColumnTypes out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw IngestError(Code::kMapping, where + ": 'properties' must be an object");
  for (const auto& [column, type] : j.items()) {
    auto t = type.is_string() ? ParseValueType(type.get<std::string>()) : std::nullopt;
    if (!t) throw IngestError(Code::kMapping, where + ": bad type for column '" + column + "'");
    out.emplace(column, *t);
  }
  return out;
}

void RequireColumn(const CsvTable& table, const std::string& file, const std::string& column) {
  if (table.Column(column) < 0) {
    throw IngestError(Code::kUnknownColumn, file + ": no column '" + column + "'");
  }
}

PropertyMap ReadProperties(const CsvTable& table, size_t row, const ColumnTypes& types,
                           const std::set<std::string>& nulls, FileReport& report) {
  PropertyMap props;
  for (const auto& [column, type] : types) {
    const std::string& cell = table.rows[row][table.Column(column)];
    if (nulls.count(cell)) continue;
    auto value = PropertyValue::Coerce(cell, type);
    if (!value) {
      report.coercion_failures.push_back({table.lines[row], column, cell, type});
      continue;
    }
    props.emplace(column, std::move(*value));
  }
  return props;
}

}  // namespace

void MappingSpec::Validate() const {
  std::set<std::string> labels;
  for (const auto& n : nodes) {
    if (n.file.empty() || n.label.empty() || n.id_column.empty()) {
      throw IngestError(Code::kMapping, "node mapping needs file, label and id column");
    }
    if (n.label == kTraitLabel) {
      throw IngestError(Code::kMapping, "node mapping may not produce the reserved Trait label");
    }
    if (!labels.insert(n.label).second) {
      throw IngestError(Code::kMapping, "label " + n.label + " mapped twice");
    }
  }
  for (const auto& e : edges) {
    if (e.file.empty() || e.label.empty()) {
      throw IngestError(Code::kMapping, "edge mapping needs file and label");
    }
    if (e.label == kHasTraitLabel) {
      throw IngestError(Code::kMapping, "edge mapping may not produce HAS_TRAIT");
    }
    for (const EndpointLookup* end : {&e.source, &e.target}) {
      if (!labels.count(end->label)) {
        throw IngestError(Code::kMapping,
                          "edge " + e.label + " refers to unmapped label '" + end->label + "'");
      }
      if (end->column.empty()) {
        throw IngestError(Code::kMapping, "edge " + e.label + " endpoint without column");
      }
    }
  }
}

MappingSpec MappingSpec::FromJson(const json& j) {
  if (!j.is_object()) throw IngestError(Code::kMapping, "mapping must be a JSON object");
  MappingSpec spec;
  if (j.contains("null_values")) {
    spec.null_values.clear();
    for (const auto& v : j["null_values"]) {
      if (!v.is_string()) throw IngestError(Code::kMapping, "null_values must be strings");
      spec.null_values.insert(v.get<std::string>());
    }
  }
  for (const auto& n : j.value("nodes", json::array())) {
    NodeMapping m;
    m.file = RequireString(n, "file", "node mapping");
    m.label = RequireString(n, "label", m.file);
    m.id_column = RequireString(n, "id", m.file);
    m.properties = TypesFromJson(n.value("properties", json()), m.file);
    spec.nodes.push_back(std::move(m));
  }
  for (const auto& e : j.value("edges", json::array())) {
    EdgeMapping m;
    m.file = RequireString(e, "file", "edge mapping");
    m.label = RequireString(e, "label", m.file);
    const std::string where = m.file + " " + m.label;
    if (!e.contains("source") || !e.contains("target")) {
      throw IngestError(Code::kMapping, where + ": needs source and target");
    }
    m.source = {RequireString(e["source"], "label", where), RequireString(e["source"], "column", where)};
    m.target = {RequireString(e["target"], "label", where), RequireString(e["target"], "column", where)};
    m.properties = TypesFromJson(e.value("properties", json()), where);
    spec.edges.push_back(std::move(m));
  }
  spec.Validate();
  return spec;
}

MappingSpec MappingSpec::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError(Code::kMissingFile, "cannot open mapping " + path.string());
  try {
    return FromJson(json::parse(in));
  } catch (const json::exception& e) {
    throw IngestError(Code::kMapping, path.string() + ": " + e.what());
  }
}

json IngestReport::ToJson() const {
  json files_json = json::array();
  for (const auto& f : files) {
    json skipped = json::array();
    for (const auto& s : f.skipped) skipped.push_back({{"line", s.line}, {"reason", s.reason}});
    json failures = json::array();
    for (const auto& c : f.coercion_failures) {
      failures.push_back({{"line", c.line},
                          {"column", c.column},
                          {"value", c.value},
                          {"type", std::string(ValueTypeName(c.type))}});
    }
    files_json.push_back({{"file", f.file},
                          {"kind", f.kind},
                          {"label", f.label},
                          {"rows", f.rows},
                          {"created", f.created},
                          {"skipped", skipped},
                          {"coercion_failures", failures}});
  }
  return json{{"nodes", nodes}, {"edges", edges}, {"files", files_json}};
}

std::string IngestReport::ToText() const {
  std::ostringstream os;
  os << "nodes " << nodes << "\nedges " << edges << "\n";
  for (const auto& f : files) {
    os << f.file << " " << f.kind << " " << f.label << ": rows " << f.rows << ", created "
       << f.created << ", skipped " << f.skipped.size() << ", coercion failures "
       << f.coercion_failures.size() << "\n";
    for (const auto& s : f.skipped) os << "  line " << s.line << ": " << s.reason << "\n";
    for (const auto& c : f.coercion_failures) {
      os << "  line " << c.line << ": '" << c.value << "' in " << c.column << " is not "
         << ValueTypeName(c.type) << "\n";
    }
  }
  return os.str();
}

IngestResult LoadCsvGraph(const MappingSpec& mapping, const std::filesystem::path& data_dir) {
  mapping.Validate();

  std::vector<std::string> files;
  std::map<std::string, size_t> file_index;
  auto want = [&](const std::string& f) {
    if (file_index.emplace(f, files.size()).second) files.push_back(f);
  };
  for (const auto& n : mapping.nodes) want(n.file);
  for (const auto& e : mapping.edges) want(e.file);

  std::vector<CsvTable> tables(files.size());
  std::vector<std::exception_ptr> errors(files.size());
  const long nfiles = static_cast<long>(files.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < nfiles; ++i) {
    try {
      tables[i] = ReadCsv(data_dir / files[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (const auto& n : mapping.nodes) {
    const CsvTable& t = tables[file_index[n.file]];
    RequireColumn(t, n.file, n.id_column);
    for (const auto& [c, type] : n.properties) RequireColumn(t, n.file, c);
  }
  for (const auto& e : mapping.edges) {
    const CsvTable& t = tables[file_index[e.file]];
    RequireColumn(t, e.file, e.source.column);
    RequireColumn(t, e.file, e.target.column);
    for (const auto& [c, type] : e.properties) RequireColumn(t, e.file, c);
  }

  IngestResult result;
  std::map<std::string, std::unordered_map<std::string, NodeId>> ids;
  for (const auto& n : mapping.nodes) {
    const CsvTable& t = tables[file_index[n.file]];
    FileReport report{n.file, "nodes", n.label, t.rows.size(), 0, {}, {}};
    auto& by_id = ids[n.label];
    std::unordered_map<std::string, size_t> first_line;
    const int id_col = t.Column(n.id_column);
    for (size_t r = 0; r < t.rows.size(); ++r) {
      const std::string& key = t.rows[r][id_col];
      if (mapping.null_values.count(key)) {
        report.skipped.push_back({t.lines[r], "empty id"});
        continue;
      }
      if (auto it = first_line.find(key); it != first_line.end()) {
        report.skipped.push_back({t.lines[r], "duplicate id '" + key + "' (first on line " +
                                                  std::to_string(it->second) + ")"});
        continue;
      }
      PropertyMap props = ReadProperties(t, r, n.properties, mapping.null_values, report);
      by_id[key] = result.graph.CreateNode({n.label}, std::move(props));
      first_line[key] = t.lines[r];
      ++report.created;
    }
    result.report.files.push_back(std::move(report));
  }

  for (const auto& e : mapping.edges) {
    const CsvTable& t = tables[file_index[e.file]];
    FileReport report{e.file, "edges", e.label, t.rows.size(), 0, {}, {}};
    const int src_col = t.Column(e.source.column);
    const int dst_col = t.Column(e.target.column);
    const auto& src_ids = ids[e.source.label];
    const auto& dst_ids = ids[e.target.label];
    for (size_t r = 0; r < t.rows.size(); ++r) {
      const std::string& s = t.rows[r][src_col];
      const std::string& d = t.rows[r][dst_col];
      if (mapping.null_values.count(s) || mapping.null_values.count(d)) {
        report.skipped.push_back({t.lines[r], "empty endpoint reference"});
        continue;
      }
      auto si = src_ids.find(s);
      auto di = dst_ids.find(d);
      if (si == src_ids.end() || di == dst_ids.end()) {
        const bool src_missing = si == src_ids.end();
        report.skipped.push_back(
            {t.lines[r], "dangling reference to " +
                             (src_missing ? e.source.label + " '" + s + "'"
                                          : e.target.label + " '" + d + "'")});
        continue;
      }
      PropertyMap props = ReadProperties(t, r, e.properties, mapping.null_values, report);
      result.graph.CreateEdge(si->second, di->second, e.label, std::move(props));
      ++report.created;
    }
    result.report.files.push_back(std::move(report));
  }
  result.report.nodes = result.graph.node_count();
  result.report.edges = result.graph.edge_count();
  return result;
}

}  // namespace traitnorm
