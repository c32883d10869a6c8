// Copyright 2026 The jpfs Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace jpfs {

// Error classes. Each maps to a distinct status code at the C boundary
// (see jpfs.h) and therefore to a distinct CLI exit code.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kFileNotFound = 2,
  kParse = 3,
  kSchema = 4,
  kScenario = 5,
  kDomain = 6,
  kIo = 7,
  kInternal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Invalid numeric input to a model function (coincident points, d <= 0, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorCode::kDomain, what) {}
};

// Scenario that cannot be scheduled, e.g. fewer users than active APs.
struct ScenarioError : Error {
  explicit ScenarioError(const std::string& what) : Error(ErrorCode::kScenario, what) {}
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& what) : Error(ErrorCode::kSchema, what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorCode::kParse, what) {}
};

struct FileNotFoundError : Error {
  explicit FileNotFoundError(const std::string& what) : Error(ErrorCode::kFileNotFound, what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ErrorCode::kIo, what) {}
};

// Violated caller contract (duplicate users in a pattern, negative rates...).
struct ContractError : Error {
  explicit ContractError(const std::string& what) : Error(ErrorCode::kInvalidArgument, what) {}
};

}  // namespace jpfs
