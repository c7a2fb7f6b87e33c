// Copyright 2026 The bsmwb Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bsmwb {

// Failure categories shared by every module. The CLI maps each to an exit
// code; library callers can switch on kind().
enum class ErrorKind {
  kRejected,   // input violates an operation's precondition
  kCapacity,   // exhaustive/search limit exceeded
  kParse,      // malformed file or text
  kIntegrity,  // declared cost disagrees with recomputation
  kMalformed,  // protocol evaluates outside its alphabet
  kMismatch,   // a verification found a wrong answer
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::kRejected, what);
}

}  // namespace bsmwb
