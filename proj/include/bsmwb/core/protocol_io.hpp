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

#include <string>

#include "bsmwb/core/protocol.hpp"
#include "bsmwb/core/truth_table.hpp"
#include "bsmwb/core/verify.hpp"
#include "json.hpp"

namespace bsmwb::core {

using Json = nlohmann::json;

inline constexpr int kProtocolSchemaVersion = 1;

// Canonical rendering: keys sorted, two-space indent, trailing newline.
std::string dump_canonical(const Json& doc);
// Parse errors carry line and column of the offending byte.
Json parse_document(const std::string& text, const std::string& source);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

Json circuit_to_json(const BooleanCircuit& c);
BooleanCircuit circuit_from_json(const Json& j);

Json cost_to_json(const CarolCost& cost);
CarolCost cost_from_json(const Json& j);

// Opaque Carols serialize by name only and cannot be loaded back.
Json carol_to_json(const CarolEvaluator& carol);
CarolEvaluator carol_from_json(const Json& j);

// {"length": L, "rows": [hex digit per symbol]}; `count` rows expected.
Json message_table_to_json(std::uint32_t length, const std::vector<std::uint8_t>& table);
std::vector<std::uint8_t> message_table_from_json(const Json& j, std::uint64_t count,
                                                  std::uint32_t& length);

Json protocol_to_json(const BsmProtocol& p);
BsmProtocol protocol_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);

// Truth-table files: a header line "arity N" followed by the packed hex
// rendering (whitespace and '#' comment lines ignored).
std::string truth_table_to_text(const TruthTable& t);
TruthTable truth_table_from_text(const std::string& text);

}  // namespace bsmwb::core
