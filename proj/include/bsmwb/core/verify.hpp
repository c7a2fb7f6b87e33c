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

#include <cstdint>
#include <string>
#include <vector>

#include "bsmwb/core/protocol.hpp"
#include "bsmwb/core/truth_table.hpp"

namespace bsmwb::core {

struct Mismatch {
  std::uint64_t x;
  std::uint64_t y;
  bool expected;
  bool produced;

  bool operator==(const Mismatch&) const = default;
};

struct VerificationReport {
  std::uint64_t pairs_checked = 0;
  std::vector<Mismatch> mismatches;
  bool audited = true;  // false when Carol is an opaque procedure

  bool ok() const { return mismatches.empty(); }
};

struct VerifyOptions {
  Limits limits;
  int jobs = 1;
};

VerificationReport verify_exhaustive(const BsmProtocol& protocol, const TruthTable& target,
                                     const VerifyOptions& options = {});

struct Measurement {
  CarolCost cost;
  std::uint32_t alice_length;
  std::uint32_t bob_length;
  bool audited;
};

// Recomputes the cost from Carol's payload and compares it with the
// declared cost; any disagreement is an integrity error.
Measurement measure(const BsmProtocol& protocol);

std::string report_to_csv(const VerificationReport& report);

}  // namespace bsmwb::core
