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

#ifndef TRAITNORM_ERROR_H_
#define TRAITNORM_ERROR_H_

#include <stdexcept>
#include <string>

namespace traitnorm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error {
 public:
  enum class Code {
    kReservedLabel,
    kEmptyLabels,
    kNonScalarValue,
    kDanglingEndpoint,
    kUnknownElement,
    kIncidentEdges,
    kInvalidId,
    kMalformedDump,
  };
  GraphError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

class DependencyError : public Error {
 public:
  enum class Code { kUndeclaredFamily, kSyntax, kMalformedLinking, kEmpty };
  DependencyError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

class NormalizeError : public Error {
 public:
  enum class Code { kConfig, kFamilyAbsent, kInconsistentCatalog, kAmbiguousTrait };
  NormalizeError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

class IngestError : public Error {
 public:
  enum class Code { kMissingFile, kUnknownColumn, kMapping, kCsvSyntax };
  IngestError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

class QueryError : public Error {
 public:
  using Error::Error;
};

}  // namespace traitnorm

#endif  // TRAITNORM_ERROR_H_
