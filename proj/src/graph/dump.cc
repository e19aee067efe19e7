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

#include "traitnorm/dump.h"

#include <fstream>
#include <sstream>

#include "traitnorm/error.h"

namespace traitnorm {
namespace {

using nlohmann::json;
using Code = GraphError::Code;

json PropsToJson(const PropertyMap& props) {
  json j = json::object();
  for (const auto& [k, v] : props) j[k] = v.ToJson();
  return j;
}

PropertyMap PropsFromJson(const json& j) {
  if (!j.is_object()) throw GraphError(Code::kMalformedDump, "props must be an object");
  PropertyMap props;
  for (const auto& [k, v] : j.items()) props.emplace(k, PropertyValue::FromJson(v));
  return props;
}

[[noreturn]] void Fail(size_t line, const std::string& why) {
  throw GraphError(Code::kMalformedDump, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

void WriteDump(const PropertyGraph& graph, std::ostream& out) {
  json header = {{"kind", "header"},
                 {"format", kDumpFormat},
                 {"next_node_id", graph.next_node_id()},
                 {"next_edge_id", graph.next_edge_id()}};
  out << header.dump() << '\n';
  for (NodeId id : graph.NodeIds()) {
    const Node& n = graph.node(id);
    json j = {{"kind", "node"},
              {"id", id},
              {"labels", json(std::vector<std::string>(n.labels.begin(), n.labels.end()))},
              {"props", PropsToJson(n.props)}};
    out << j.dump() << '\n';
  }
  for (EdgeId id : graph.EdgeIds()) {
    const Edge& e = graph.edge(id);
    json j = {{"kind", "edge"}, {"id", id},         {"label", e.label},
              {"src", e.src.id}, {"dst", e.dst}, {"props", PropsToJson(e.props)}};
    if (e.src.is_edge()) j["src_kind"] = "edge";
    out << j.dump() << '\n';
  }
}

std::string DumpToString(const PropertyGraph& graph) {
  std::ostringstream os;
  WriteDump(graph, os);
  return os.str();
}

void SaveDump(const PropertyGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  WriteDump(graph, out);
  if (!out) throw Error("failed writing " + path.string());
}

PropertyGraph ReadDump(std::istream& in) {
  PropertyGraph graph;
  std::string line;
  size_t line_no = 0;
  bool saw_header = false;
  uint64_t next_node = 0, next_edge = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      Fail(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
      Fail(line_no, "record without a 'kind' field");
    }
    const std::string kind = j["kind"].get<std::string>();
    try {
      if (kind == "header") {
        if (saw_header) Fail(line_no, "duplicate header");
        if (j.value("format", "") != kDumpFormat) Fail(line_no, "unsupported dump format");
        next_node = j.at("next_node_id").get<uint64_t>();
        next_edge = j.at("next_edge_id").get<uint64_t>();
        saw_header = true;
      } else if (!saw_header) {
        Fail(line_no, "first record must be the header");
      } else if (kind == "node") {
        LabelSet labels;
        for (const auto& l : j.at("labels")) labels.insert(l.get<std::string>());
        graph.RestoreNode(j.at("id").get<uint64_t>(), std::move(labels),
                          PropsFromJson(j.at("props")));
      } else if (kind == "edge") {
        ElementKind src_kind = ElementKind::kNode;
        if (j.contains("src_kind")) {
          const std::string sk = j["src_kind"].get<std::string>();
          if (sk == "edge") {
            src_kind = ElementKind::kEdge;
          } else if (sk != "node") {
            Fail(line_no, "unknown src_kind '" + sk + "'");
          }
        }
        graph.RestoreEdge(j.at("id").get<uint64_t>(), {src_kind, j.at("src").get<uint64_t>()},
                          j.at("dst").get<uint64_t>(), j.at("label").get<std::string>(),
                          PropsFromJson(j.at("props")));
      } else {
        Fail(line_no, "unknown record kind '" + kind + "'");
      }
    } catch (const GraphError& e) {
      if (e.code() == Code::kMalformedDump &&
          std::string_view(e.what()).substr(0, 5) == "line ") {
        throw;
      }
      Fail(line_no, e.what());
    } catch (const json::exception& e) {
      Fail(line_no, e.what());
    }
  }
  if (!saw_header) Fail(line_no, "missing header record");
  if (next_node < graph.next_node_id() || next_edge < graph.next_edge_id()) {
    Fail(line_no, "header id allocators are below the highest stored id");
  }
  graph.ReserveIds(next_node, next_edge);
  return graph;
}

PropertyGraph LoadDump(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open dump " + path.string());
  return ReadDump(in);
}

}  // namespace traitnorm
