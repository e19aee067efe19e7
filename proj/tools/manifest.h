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

#ifndef TRAITNORM_TOOLS_MANIFEST_H_
#define TRAITNORM_TOOLS_MANIFEST_H_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

namespace traitnorm::cli {

// Hex SHA-256 of a file's bytes; empty if unreadable.
std::string Sha256File(const std::filesystem::path& path);

// Record of one command run. Inputs are hashed when added, before any
// output is produced.
class RunManifest {
 public:
  explicit RunManifest(std::string command);

  void AddInput(const std::string& role, const std::filesystem::path& path);
  void AddOutput(const std::string& role, const std::filesystem::path& path);
  void AddStage(const std::string& stage, nlohmann::json summary);
  void Finish(int exit_code, const std::string& error = {});

  const nlohmann::json& json() const { return doc_; }
  void Write(const std::filesystem::path& path) const;

 private:
  nlohmann::json doc_;
};

}  // namespace traitnorm::cli

#endif  // TRAITNORM_TOOLS_MANIFEST_H_
