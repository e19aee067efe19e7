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

#include "manifest.h"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>

namespace traitnorm::cli {

std::string Sha256File(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) return {};
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) return {};
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

RunManifest::RunManifest(std::string command) {
  doc_ = {{"tool", "traitnorm"},
          {"version", TRAITNORM_VERSION},
          {"command", std::move(command)},
          {"inputs", nlohmann::json::array()},
          {"stages", nlohmann::json::array()},
          {"outputs", nlohmann::json::array()}};
}

void RunManifest::AddInput(const std::string& role, const std::filesystem::path& path) {
  doc_["inputs"].push_back({{"role", role}, {"path", path.string()}, {"sha256", Sha256File(path)}});
}

void RunManifest::AddOutput(const std::string& role, const std::filesystem::path& path) {
  doc_["outputs"].push_back({{"role", role}, {"path", path.string()}, {"sha256", Sha256File(path)}});
}

void RunManifest::AddStage(const std::string& stage, nlohmann::json summary) {
  doc_["stages"].push_back({{"stage", stage}, {"summary", std::move(summary)}});
}

void RunManifest::Finish(int exit_code, const std::string& error) {
  doc_["exit_code"] = exit_code;
  doc_["status"] = exit_code == 0 ? "ok" : "failed";
  if (!error.empty()) doc_["error"] = error;
}

void RunManifest::Write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  out << doc_.dump(2) << "\n";
}

}  // namespace traitnorm::cli
