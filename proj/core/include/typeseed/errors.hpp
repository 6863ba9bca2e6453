// Copyright 2026 The typeseed Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TYPESEED_ERRORS_HPP_
#define TYPESEED_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace typeseed {

// Root of every error the library throws. `kind()` is a stable, kebab-case
// tag used by the CLI and the HTTP service in structured error bodies.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Violated argument precondition of a random primitive (e.g. bound == 0).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error("domain-error", message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error("precondition", message) {}
};

class UnresolvedTypeError : public Error {
 public:
  UnresolvedTypeError(std::string name, const std::string& message)
      : Error("unresolved-type", message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class AliasCycleError : public Error {
 public:
  explicit AliasCycleError(std::vector<std::string> chain);

  // The offending chain, starting and ending at the same name.
  const std::vector<std::string>& chain() const noexcept { return chain_; }

 private:
  std::vector<std::string> chain_;
};

class UnsupportedRecursionError : public Error {
 public:
  explicit UnsupportedRecursionError(const std::string& message)
      : Error("unsupported-recursion", message) {}
};

// A name is already taken by an entry of a different table.
class RegistrationConflictError : public Error {
 public:
  explicit RegistrationConflictError(const std::string& message)
      : Error("registration-conflict", message) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error("syntax-error", message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// TypeInfo file failed schema validation. The message carries the field path.
class IngestError : public Error {
 public:
  explicit IngestError(const std::string& message)
      : Error("ingest-error", message) {}
};

// Wire value failed schema validation. The message carries the JSON path.
class DecodeError : public Error {
 public:
  explicit DecodeError(const std::string& message)
      : Error("decode-error", message) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error("internal", message) {}
};

}  // namespace typeseed

#endif  // TYPESEED_ERRORS_HPP_
