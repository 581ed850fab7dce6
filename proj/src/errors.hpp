// Copyright 2026 The Cardex Authors
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

#ifndef CARDEX_ERRORS_HPP_
#define CARDEX_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cardex {

// Error taxonomy for the whole library. The numeric codes line up with the
// C API status values and the CLI exit codes (1 usage, 2 format, 3 invariant).
enum class ErrorCode { usage = 1, format = 2, invariant = 3, io = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Malformed input data; carries the 1-based line number when known.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error(ErrorCode::format, "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An alias claimed by two canonical entries of the same dictionary.
class ConflictError : public Error {
 public:
  ConflictError(const std::string& alias, const std::string& canonical_a,
                const std::string& canonical_b)
      : Error(ErrorCode::format, "alias \"" + alias + "\" maps to both \"" +
                                     canonical_a + "\" and \"" + canonical_b + "\"") {}
};

class InvalidTree : public Error {
 public:
  explicit InvalidTree(const std::string& reason)
      : Error(ErrorCode::invariant, "invalid dependency tree: " + reason) {}
};

// No verb or adjective core to anchor the rules on.
class NoPredicate : public Error {
 public:
  NoPredicate() : Error(ErrorCode::invariant, "sentence has no predicate core") {}
};

// The grammatical subject does not resolve to a known model name.
class RejectedSubject : public Error {
 public:
  explicit RejectedSubject(const std::string& surface)
      : Error(ErrorCode::invariant, "subject \"" + surface + "\" is not a known model"),
        surface_(surface) {}
  const std::string& surface() const { return surface_; }

 private:
  std::string surface_;
};

class UnknownNode : public Error {
 public:
  explicit UnknownNode(const std::string& id)
      : Error(ErrorCode::invariant, "unknown graph node \"" + id + "\"") {}
};

// A dependency label required by a fired rule has no mapping in the scheme.
class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error(ErrorCode::invariant, "no mapping for dependency label \"" + label + "\"") {}
};

class DuplicateKey : public Error {
 public:
  DuplicateKey(const std::string& doc_id, int sentence_index)
      : Error(ErrorCode::format, "duplicate gold record for (" + doc_id + ", " +
                                     std::to_string(sentence_index) + ")") {}
};

class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what)
      : Error(ErrorCode::invariant, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

}  // namespace cardex

#endif  // CARDEX_ERRORS_HPP_
