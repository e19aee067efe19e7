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

#include <iomanip>
#include <sstream>

#include "traitnorm/query.h"

namespace traitnorm {
namespace {

using nlohmann::json;

double Millis(std::chrono::nanoseconds ns) { return static_cast<double>(ns.count()) / 1e6; }

double Ratio(double a, double b) { return b == 0 ? 0.0 : a / b; }

json SideJson(const QueryResult& r, bool with_time) {
  json trace = json::array();
  for (const auto& t : r.stats.trace) {
    trace.push_back({{"op", t.op}, {"rows", t.rows}, {"accesses", t.accesses}});
  }
  json j{{"rows", r.stats.rows},
         {"accesses", r.stats.accesses},
         {"cartesian", r.stats.cartesian},
         {"trace", trace}};
  if (with_time) j["time_ms"] = Millis(r.stats.wall);
  return j;
}

std::string Fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

std::vector<WorkloadRow> RunWorkload(const std::vector<WorkloadTest>& tests,
                                     const PropertyGraph& pre, const PropertyGraph& post) {
  std::vector<WorkloadRow> rows;
  for (const WorkloadTest& t : tests) {
    WorkloadRow row;
    row.name = t.name;
    row.purpose = t.purpose;
    row.flags = t.flags;
    row.pre = Execute(*t.embedded, pre);
    row.post = Execute(*t.trait, post);
    row.access_ratio = Ratio(static_cast<double>(row.pre.stats.accesses),
                             static_cast<double>(row.post.stats.accesses));
    row.time_ratio = Ratio(Millis(row.pre.stats.wall), Millis(row.post.stats.wall));
    row.equivalent = row.pre.rows == row.post.rows;
    rows.push_back(std::move(row));
  }
  return rows;
}

json WorkloadJson(const std::vector<WorkloadRow>& rows, bool with_time) {
  json out = json::array();
  for (const auto& r : rows) {
    json j{{"test", r.name},
           {"purpose", r.purpose},
           {"flags", json(r.flags)},
           {"equivalent", r.equivalent},
           {"pre", SideJson(r.pre, with_time)},
           {"post", SideJson(r.post, with_time)},
           {"access_ratio", r.access_ratio}};
    if (with_time) j["time_ratio"] = r.time_ratio;
    out.push_back(std::move(j));
  }
  return out;
}

std::string WorkloadText(const std::vector<WorkloadRow>& rows, bool with_time) {
  std::vector<std::string> header = {"test", "pre_acc", "post_acc", "ratio"};
  if (with_time) header.insert(header.end(), {"pre_ms", "post_ms"});
  header.insert(header.end(), {"pre_cart", "post_cart", "rows", "same", "flags"});

  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    std::vector<std::string> c = {r.name, std::to_string(r.pre.stats.accesses),
                                  std::to_string(r.post.stats.accesses), Fixed(r.access_ratio, 2)};
    if (with_time) {
      c.push_back(Fixed(Millis(r.pre.stats.wall), 3));
      c.push_back(Fixed(Millis(r.post.stats.wall), 3));
    }
    std::string flags;
    for (const auto& f : r.flags) flags += (flags.empty() ? "" : ",") + f;
    c.insert(c.end(), {r.pre.stats.cartesian ? "yes" : "no", r.post.stats.cartesian ? "yes" : "no",
                       std::to_string(r.pre.stats.rows), r.equivalent ? "yes" : "NO",
                       flags.empty() ? "-" : flags});
    cells.push_back(std::move(c));
  }
  std::vector<size_t> width(header.size());
  for (size_t i = 0; i < header.size(); ++i) {
    width[i] = header[i].size();
    for (const auto& c : cells) width[i] = std::max(width[i], c[i].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& c) {
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << "  ";
      if (i == 0 || i + 1 == c.size()) {
        os << std::left << std::setw(static_cast<int>(width[i])) << c[i];
      } else {
        os << std::right << std::setw(static_cast<int>(width[i])) << c[i];
      }
    }
    os << "\n";
  };
  line(header);
  for (const auto& c : cells) line(c);
  std::string text = os.str();
  // Trailing pad from the left-aligned last column.
  std::string trimmed;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    l.erase(l.find_last_not_of(' ') + 1);
    trimmed += l + "\n";
  }
  return trimmed;
}

}  // namespace traitnorm
