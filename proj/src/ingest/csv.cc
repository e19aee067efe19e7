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
#include <sstream>

#include "traitnorm/error.h"
#include "traitnorm/ingest.h"

namespace traitnorm {
namespace {

using Code = IngestError::Code;

[[noreturn]] void Fail(const std::string& source, size_t line, const std::string& what) {
  throw IngestError(Code::kCsvSyntax, source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

int CsvTable::Column(std::string_view column) const {
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == column) return static_cast<int>(i);
  }
  return -1;
}

CsvTable ParseCsv(std::string_view text, const std::string& source) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<std::vector<std::string>> records;
  std::vector<size_t> starts;
  std::vector<std::string> record;
  std::string field;
  size_t line = 1;
  size_t record_line = 1;
  size_t i = 0;
  bool field_started = false;

  auto end_record = [&] {
    const bool blank = record.empty() && !field_started;
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
    if (!blank) {
      records.push_back(std::move(record));
      starts.push_back(record_line);
    }
    record.clear();
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == '"' && !field_started) {
      field_started = true;
      const size_t open_line = line;
      ++i;
      while (true) {
        if (i >= text.size()) Fail(source, open_line, "unterminated quoted field");
        if (text[i] == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        if (text[i] == '\n') ++line;
        field += text[i++];
      }
      if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
        Fail(source, line, "unexpected character after closing quote");
      }
      continue;
    }
    if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
      field_started = false;
      ++i;
      continue;
    }
    if (c == '\r' || c == '\n') {
      end_record();
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++i;
      ++line;
      record_line = line;
      continue;
    }
    if (c == '"') Fail(source, line, "quote inside unquoted field");
    field_started = true;
    field += c;
    ++i;
  }
  if (field_started || !record.empty()) end_record();

  if (records.empty()) Fail(source, 1, "missing header row");
  CsvTable table;
  table.header = std::move(records.front());
  std::set<std::string> seen;
  for (const auto& h : table.header) {
    if (!seen.insert(h).second) Fail(source, starts.front(), "duplicate column '" + h + "'");
  }
  for (size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size()) {
      Fail(source, starts[r], "expected " + std::to_string(table.header.size()) +
                                  " fields, found " + std::to_string(records[r].size()));
    }
    table.rows.push_back(std::move(records[r]));
    table.lines.push_back(starts[r]);
  }
  return table;
}

CsvTable ReadCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError(Code::kMissingFile, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseCsv(ss.str(), path.filename().string());
}

}  // namespace traitnorm
