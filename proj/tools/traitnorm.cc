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

// traitnorm: ingest, profile, normalize, check, measure and benchmark
// property graphs stored as dump files.
//
// Exit codes: 0 success, 1 conformance failure, 2 input error,
// 3 dependency violation.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "manifest.h"
#include "traitnorm/conformance.h"
#include "traitnorm/dump.h"
#include "traitnorm/error.h"
#include "traitnorm/ingest.h"
#include "traitnorm/metrics.h"
#include "traitnorm/normalizer.h"
#include "traitnorm/query.h"
#include "traitnorm/synth.h"

namespace traitnorm::cli {
namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNonConforming = 1;
constexpr int kInputError = 2;
constexpr int kDependencyViolation = 3;

struct Common {
  std::string format = "table";
  std::string manifest;
};

std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

std::string Join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

// Families declared by trait nodes already in the graph.
// Families recovered from trait nodes; scope is the labels of the elements
// linking to them.
std::vector<TraitFamily> FamiliesFromTraits(const PropertyGraph& graph) {
  std::map<std::string, std::set<std::string>> keys;
  std::map<std::string, LabelSet> scopes;
  for (NodeId id : graph.NodesWithLabel(kTraitLabel)) {
    const PropertyValue* fam = graph.property(ElementRef::Node(id), kFamilyKey);
    if (!fam || !fam->is_text()) continue;
    auto& ks = keys[fam->as_text()];
    for (const auto& [k, v] : graph.properties(ElementRef::Node(id))) {
      if (k != kFamilyKey) ks.insert(k);
    }
    LabelSet& scope = scopes[fam->as_text()];
    for (EdgeId eid : graph.InEdges(id)) {
      const Edge& e = graph.edge(eid);
      if (e.label != kHasTraitLabel) continue;
      if (e.src.is_edge()) {
        scope.insert(graph.edge(e.src.id).label);
      } else {
        const LabelSet& labels = graph.node(e.src.id).labels;
        scope.insert(labels.begin(), labels.end());
      }
    }
  }
  std::vector<TraitFamily> out;
  for (auto& [name, ks] : keys) out.push_back({name, {ks.begin(), ks.end()}, scopes[name]});
  return out;
}

std::vector<std::string> FamilyNames(const std::vector<TraitFamily>& families) {
  std::vector<std::string> names;
  for (const auto& f : families) names.push_back(f.name);
  return names;
}

// Runs `body`, maps exceptions to exit codes, and writes the manifest
// whatever happens.
int Guarded(RunManifest& manifest, const std::string& manifest_path,
            const std::function<int()>& body) {
  int code = kOk;
  std::string error;
  try {
    code = body();
  } catch (const std::exception& e) {
    error = e.what();
    std::cerr << "error: " << error << "\n";
    code = kInputError;
  }
  manifest.Finish(code, error);
  if (!manifest_path.empty()) {
    try {
      manifest.Write(manifest_path);
    } catch (const std::exception& e) {
      std::cerr << "warning: manifest not written: " << e.what() << "\n";
    }
  }
  return code;
}

std::string ManifestPath(const Common& common, const std::string& out) {
  if (!common.manifest.empty()) return common.manifest;
  return out.empty() ? std::string() : out + ".manifest.json";
}

// ---- ingest ----

struct IngestArgs {
  std::string mapping;
  std::string data;
  std::string out;
  std::string report;
};

int RunIngest(const IngestArgs& a, const Common& common) {
  RunManifest manifest("ingest");
  return Guarded(manifest, ManifestPath(common, a.out), [&] {
    manifest.AddInput("mapping", a.mapping);
    MappingSpec mapping = MappingSpec::Load(a.mapping);
    std::filesystem::path dir =
        a.data.empty() ? std::filesystem::path(a.mapping).parent_path() : std::filesystem::path(a.data);
    std::set<std::string> files;
    for (const auto& n : mapping.nodes) files.insert(n.file);
    for (const auto& e : mapping.edges) files.insert(e.file);
    for (const auto& f : files) manifest.AddInput("csv", dir / f);

    IngestResult result = LoadCsvGraph(mapping, dir);
    SaveDump(result.graph, a.out);
    manifest.AddStage("ingest", {{"nodes", result.report.nodes}, {"edges", result.report.edges}});
    manifest.AddOutput("dump", a.out);
    if (!a.report.empty()) {
      WriteText(a.report, result.report.ToJson().dump(2) + "\n");
      manifest.AddOutput("report", a.report);
    }
    if (common.format == "json") {
      std::cout << result.report.ToJson().dump(2) << "\n";
    } else {
      std::cout << result.report.ToText();
    }
    return kOk;
  });
}

// ---- profile ----

struct ProfileArgs {
  std::string dump;
  std::string config;
};

int RunProfile(const ProfileArgs& a, const Common& common) {
  RunManifest manifest("profile");
  return Guarded(manifest, common.manifest, [&] {
    manifest.AddInput("dump", a.dump);
    NormalizerConfig config;
    if (!a.config.empty()) {
      manifest.AddInput("config", a.config);
      config = NormalizerConfig::Load(a.config);
    }
    PropertyGraph graph = LoadDump(a.dump);
    std::vector<KeyProfile> profiles = ProfileKeys(graph, config.scope);
    json rows = json::array();
    std::ostringstream text;
    text << "key  occurrences  distinct  types  identifier  independent  reasons\n";
    for (const auto& p : profiles) {
      IndependenceVerdict v = IsSemanticallyIndependent(p, config);
      rows.push_back({{"key", p.key},
                      {"occurrences", p.occurrences},
                      {"distinct", p.distinct},
                      {"per_type", p.per_type},
                      {"cross_type_reuse", p.cross_type_reuse},
                      {"candidate_identifier", p.candidate_identifier()},
                      {"independent", v.independent},
                      {"reasons", v.reasons}});
      text << p.key << "  " << p.occurrences << "  " << p.distinct << "  " << p.per_type.size()
           << "  " << (p.candidate_identifier() ? "yes" : "no") << "  "
           << (v.independent ? "yes" : "no") << "  " << Join(v.reasons, "; ") << "\n";
    }
    manifest.AddStage("profile", {{"keys", profiles.size()}});
    std::cout << (common.format == "json" ? rows.dump(2) + "\n" : text.str());
    return kOk;
  });
}

// ---- normalize ----

struct NormalizeArgs {
  std::string dump;
  std::string config;
  std::string deps;
  std::optional<uint64_t> tau;
  std::string out;
  std::string report;
};

std::string NormalizeSummary(const NormalizationReport& r) {
  size_t violated = 0;
  for (const auto& v : r.verdicts) violated += !v.satisfied;
  std::ostringstream os;
  os << "families      " << Join(FamilyNames(r.families)) << "\n";
  for (const auto& d : r.detection) {
    os << "  " << d.family << ": " << d.distinct_tuples << " distinct tuples, "
       << d.traits_created << " traits created, " << d.traits_reused << " reused";
    if (d.skipped) os << " (skipped: " << d.reason << ")";
    os << "\n";
  }
  os << "traits        " << r.traits_created << " created\n";
  os << "links         " << r.extraction.links_added << " added\n";
  os << "removed       " << r.extraction.properties_removed << " property instances\n";
  os << "unmatched     " << r.extraction.unmatched.size() << "\n";
  os << "dependencies  " << r.verdicts.size() << " checked, " << violated << " violated\n";
  for (const auto& v : r.verdicts) {
    os << "  " << v.dependency << ": " << (v.satisfied ? "holds" : "VIOLATED") << " (covered "
       << v.covered << ", missing Y " << v.missing_y.size() << ")\n";
  }
  os << "lossless      " << (r.lossless.lossless ? "yes" : "NO") << " (" << r.lossless.diffs.size()
     << " diffs)\n";
  os << "committed     " << (r.committed ? "yes" : "no") << "\n";
  return os.str();
}

int RunNormalize(const NormalizeArgs& a, const Common& common) {
  RunManifest manifest("normalize");
  return Guarded(manifest, ManifestPath(common, a.out), [&] {
    manifest.AddInput("dump", a.dump);
    manifest.AddInput("config", a.config);
    NormalizerConfig config = NormalizerConfig::Load(a.config);
    if (a.tau) config.tau = *a.tau;
    if (!a.deps.empty()) config.dependency_file = a.deps;
    std::string dep_text;
    if (config.dependency_file) {
      manifest.AddInput("dependencies", *config.dependency_file);
      dep_text = ReadText(*config.dependency_file);
    }
    PropertyGraph input = LoadDump(a.dump);

    NormalizationRun run = Normalize(input, config, dep_text);
    const NormalizationReport& r = run.report;
    manifest.AddStage("detect", {{"traits_created", r.traits_created}});
    manifest.AddStage("extract", {{"links_added", r.extraction.links_added},
                                  {"properties_removed", r.extraction.properties_removed},
                                  {"unmatched", r.extraction.unmatched.size()}});
    manifest.AddStage("enforce", {{"dependencies", r.verdicts.size()},
                                  {"satisfied", r.dependencies_satisfied}});
    manifest.AddStage("verify", {{"lossless", r.lossless.lossless},
                                 {"diffs", r.lossless.diffs.size()},
                                 {"committed", r.committed}});
    if (r.committed) {
      SaveDump(run.graph, a.out);
      manifest.AddOutput("dump", a.out);
    }
    json report = r.ToJson();
    report["conforming"] = r.committed && r.dependencies_satisfied;
    if (!a.report.empty()) {
      WriteText(a.report, report.dump(2) + "\n");
      manifest.AddOutput("report", a.report);
    }
    std::cout << (common.format == "json" ? report.dump(2) + "\n" : NormalizeSummary(r));
    if (!r.committed) return kNonConforming;
    if (!r.dependencies_satisfied) return kDependencyViolation;
    return kOk;
  });
}

// ---- check ----

struct CheckArgs {
  std::string dump;
  std::string config;
};

int RunCheck(const CheckArgs& a, const Common& common) {
  RunManifest manifest("check");
  return Guarded(manifest, common.manifest, [&] {
    manifest.AddInput("dump", a.dump);
    PropertyGraph graph = LoadDump(a.dump);
    std::vector<TraitFamily> families;
    std::vector<std::string> delimiters = NormalizerConfig().atomicity_delimiters;
    if (!a.config.empty()) {
      manifest.AddInput("config", a.config);
      NormalizerConfig config = NormalizerConfig::Load(a.config);
      families = ResolveFamilies(graph, config);
      delimiters = config.atomicity_delimiters;
    } else {
      families = FamiliesFromTraits(graph);
    }
    ConformanceReport report = CheckTraitNormalForm(graph, families);
    std::vector<AtomicityFinding> packed = CheckValueAtomicity(graph, delimiters);
    manifest.AddStage("check", {{"conforming", report.conforming()},
                                {"findings", report.findings.size()},
                                {"packed_values", packed.size()}});
    if (common.format == "json") {
      json j = report.ToJson();
      j["families"] = FamilyNames(families);
      j["packed_values"] = packed.size();
      std::cout << j.dump(2) << "\n";
    } else {
      if (report.conforming()) {
        std::cout << "conforming\n";
      } else {
        std::cout << "non-conforming: " << report.findings.size() << " findings (canonicality "
                  << report.Count(ConditionGroup::kCanonicality) << ", atomicity "
                  << report.Count(ConditionGroup::kAtomicity) << ", exclusivity "
                  << report.Count(ConditionGroup::kExclusivity) << ")\n";
      }
      std::cout << "packed values: " << packed.size() << "\n";
    }
    return report.conforming() ? kOk : kNonConforming;
  });
}

// ---- metrics ----

struct MetricsArgs {
  std::vector<std::string> dumps;
  std::string config;
  std::string ledger;
};

int RunMetrics(const MetricsArgs& a, const Common& common) {
  RunManifest manifest("metrics");
  return Guarded(manifest, common.manifest, [&] {
    if (a.dumps.empty() || a.dumps.size() > 2) throw Error("metrics takes one or two dumps");
    std::optional<NormalizerConfig> config;
    if (!a.config.empty()) {
      manifest.AddInput("config", a.config);
      config = NormalizerConfig::Load(a.config);
    }
    std::vector<AblationRow> rows;
    std::vector<TraitFamily> families;
    for (size_t i = 0; i < a.dumps.size(); ++i) {
      manifest.AddInput("dump", a.dumps[i]);
      PropertyGraph g = LoadDump(a.dumps[i]);
      if (i == 0) families = config ? ResolveFamilies(g, *config) : FamiliesFromTraits(g);
      std::string state = a.dumps.size() == 2 ? (i == 0 ? "pre" : "post")
                                              : std::filesystem::path(a.dumps[i]).stem().string();
      rows.push_back({state, Measure(g, families)});
    }
    json out;
    out["families"] = FamilyNames(families);
    out["states"] = AblationJson(rows);
    std::optional<RedundancyRemoval> removal;
    if (rows.size() == 2) {
      size_t ledger = rows[0].metrics.embedded_occurrences - rows[1].metrics.embedded_occurrences;
      if (!a.ledger.empty()) {
        manifest.AddInput("normalize-report", a.ledger);
        json rep = json::parse(ReadText(a.ledger));
        ledger = rep.at("removed_values").size();
      }
      removal = RedundancyRemoved(rows[0].metrics, rows[1].metrics, ledger);
      out["redundancy_removed"] = {{"duplicates", removal->duplicates},
                                   {"removed", removal->removed},
                                   {"ledger", removal->ledger},
                                   {"reconciled", removal->reconciled}};
    }
    manifest.AddStage("metrics", {{"states", rows.size()}});
    if (common.format == "json") {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "families: " << Join(FamilyNames(families)) << "\n" << AblationText(rows);
      if (removal) {
        std::cout << "duplicates beyond first: " << removal->duplicates << "\nremoved: "
                  << removal->removed << " (ledger " << removal->ledger << ", "
                  << (removal->reconciled ? "reconciled" : "NOT reconciled") << ")\n";
      }
    }
    return kOk;
  });
}

// ---- bench ----

struct BenchArgs {
  std::string pre;
  std::string post;
  std::string workload;
  std::string out;
  bool no_time = false;
};

int RunBench(const BenchArgs& a, const Common& common) {
  RunManifest manifest("bench");
  return Guarded(manifest, ManifestPath(common, a.out), [&] {
    manifest.AddInput("pre", a.pre);
    manifest.AddInput("post", a.post);
    manifest.AddInput("workload", a.workload);
    std::vector<WorkloadTest> tests = LoadWorkload(a.workload);
    PropertyGraph pre = LoadDump(a.pre);
    PropertyGraph post = LoadDump(a.post);
    std::vector<WorkloadRow> rows = RunWorkload(tests, pre, post);
    const bool with_time = !a.no_time;
    json j = WorkloadJson(rows, with_time);
    if (!a.out.empty()) {
      WriteText(a.out, j.dump(2) + "\n");
      manifest.AddOutput("comparison", a.out);
    }
    size_t same = 0;
    for (const auto& r : rows) same += r.equivalent;
    manifest.AddStage("bench", {{"tests", rows.size()}, {"equivalent", same}});
    std::cout << (common.format == "json" ? j.dump(2) + "\n" : WorkloadText(rows, with_time));
    return kOk;
  });
}

// ---- synth ----

struct SynthArgs {
  SyntheticSpec spec;
  std::string out;
  std::string config_out;
};

int RunSynth(const SynthArgs& a, const Common& common) {
  RunManifest manifest("synth");
  return Guarded(manifest, ManifestPath(common, a.out), [&] {
    SyntheticGraph g = GenerateSynthetic(a.spec);
    SaveDump(g.graph, a.out);
    manifest.AddStage("synth", {{"seed", a.spec.seed},
                                {"nodes", g.graph.node_count()},
                                {"edges", g.graph.edge_count()}});
    manifest.AddOutput("dump", a.out);
    if (!a.config_out.empty()) {
      NormalizerConfig config;
      config.families = g.families;
      WriteText(a.config_out, config.ToJson().dump(2) + "\n");
      manifest.AddOutput("config", a.config_out);
    }
    if (common.format == "json") {
      std::cout << json{{"nodes", g.graph.node_count()}, {"edges", g.graph.edge_count()},
                        {"families", FamilyNames(g.families)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "nodes " << g.graph.node_count() << "\nedges " << g.graph.edge_count()
                << "\nfamilies " << Join(FamilyNames(g.families)) << "\n";
    }
    return kOk;
  });
}

}  // namespace
}  // namespace traitnorm::cli

int main(int argc, char** argv) {
  using namespace traitnorm::cli;
  CLI::App app{"Trait extraction for property graphs"};
  app.set_version_flag("--version", TRAITNORM_VERSION);
  app.require_subcommand(1);

  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--manifest", common.manifest, "Run manifest path");
  };

  IngestArgs ingest;
  auto* c_ingest = app.add_subcommand("ingest", "Load CSV files into a dump");
  c_ingest->add_option("--mapping", ingest.mapping, "Mapping JSON")->required();
  c_ingest->add_option("--data", ingest.data, "CSV directory (default: mapping directory)");
  c_ingest->add_option("--out", ingest.out, "Output dump")->required();
  c_ingest->add_option("--report", ingest.report, "Write the ingest report as JSON");
  add_common(c_ingest);

  ProfileArgs profile;
  auto* c_profile = app.add_subcommand("profile", "Profile property keys");
  c_profile->add_option("dump", profile.dump)->required();
  c_profile->add_option("--config", profile.config, "Normalizer config");
  add_common(c_profile);

  NormalizeArgs norm;
  uint64_t tau = 0;
  auto* c_norm = app.add_subcommand("normalize", "Extract traits");
  c_norm->add_option("dump", norm.dump)->required();
  c_norm->add_option("--config", norm.config, "Normalizer config")->required();
  c_norm->add_option("--deps", norm.deps, "Dependency file (overrides the config)");
  auto* tau_opt = c_norm->add_option("--tau", tau, "Distinct-tuple ceiling per family")
                      ->check(CLI::PositiveNumber);
  c_norm->add_option("--out", norm.out, "Output dump")->required();
  c_norm->add_option("--report", norm.report, "Write the full report as JSON");
  add_common(c_norm);

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Check trait normal form");
  c_check->add_option("dump", check.dump)->required();
  c_check->add_option("--config", check.config, "Normalizer config");
  add_common(c_check);

  MetricsArgs metrics;
  auto* c_metrics = app.add_subcommand("metrics", "Redundancy and complexity of one or two dumps");
  c_metrics->add_option("dumps", metrics.dumps, "Dump, or pre and post dumps")->required()->expected(1, 2);
  c_metrics->add_option("--config", metrics.config, "Normalizer config");
  c_metrics->add_option("--ledger", metrics.ledger, "Normalize report to reconcile against");
  add_common(c_metrics);

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Run the query workload on a pre/post pair");
  c_bench->add_option("pre", bench.pre)->required();
  c_bench->add_option("post", bench.post)->required();
  c_bench->add_option("--workload", bench.workload, "Workload file")->required();
  c_bench->add_option("--out", bench.out, "Write the comparison as JSON");
  c_bench->add_flag("--no-time", bench.no_time, "Omit wall-time fields");
  add_common(c_bench);

  SynthArgs synth;
  auto* c_synth = app.add_subcommand("synth", "Generate a synthetic graph");
  c_synth->add_option("--seed", synth.spec.seed, "Random seed");
  c_synth->add_option("--nodes", synth.spec.nodes, "Node count");
  c_synth->add_option("--labels", synth.spec.labels, "Label count");
  c_synth->add_option("--keys", synth.spec.keys, "Metadata keys per element");
  c_synth->add_option("--distinct", synth.spec.distinct, "Distinct values per family")
      ->check(CLI::PositiveNumber);
  c_synth->add_option("--arity", synth.spec.family_arity, "Keys per family")
      ->check(CLI::PositiveNumber);
  c_synth->add_option("--missing", synth.spec.missing, "Fraction of empty metadata cells")
      ->check(CLI::Range(0.0, 1.0));
  c_synth->add_option("--out", synth.out, "Output dump")->required();
  c_synth->add_option("--config-out", synth.config_out, "Write a matching normalizer config");
  add_common(c_synth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*c_ingest) return RunIngest(ingest, common);
  if (*c_profile) return RunProfile(profile, common);
  if (*c_norm) {
    if (*tau_opt) norm.tau = tau;
    return RunNormalize(norm, common);
  }
  if (*c_check) return RunCheck(check, common);
  if (*c_metrics) return RunMetrics(metrics, common);
  if (*c_bench) return RunBench(bench, common);
  if (*c_synth) return RunSynth(synth, common);
  return kInputError;
}
