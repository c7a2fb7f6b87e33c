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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bsmwb/core/protocol.hpp"
#include "bsmwb/core/protocol_io.hpp"
#include "bsmwb/core/truth_table.hpp"
#include "bsmwb/splithide/reductions.hpp"

namespace bsmwb::bridges {

using core::BsmProtocol;
using core::CarolEvaluator;
using core::TruthTable;

// Non-adaptive two-oracle instance hiding, fully tabulated. Henry's single
// random string r indexes [0, randomness_count) and drives both queries.
// Henry's combine is a Carol over (q_A bits || answer_A, q_B bits || answer_B):
// he sees his own queries and the two answers.
struct IhScheme {
  int n = 0;
  std::uint64_t randomness_count = 1;
  int query_bits_a = 0;
  int query_bits_b = 0;
  std::vector<std::uint64_t> query_a;  // [x * randomness_count + r]
  std::vector<std::uint64_t> query_b;
  std::uint32_t modulus = 2;
  std::uint32_t answer_length_a = 0;
  std::uint32_t answer_length_b = 0;
  std::vector<std::uint8_t> oracle_a;  // [q * answer_length_a], one row per query value
  std::vector<std::uint8_t> oracle_b;
  CarolEvaluator combine = CarolEvaluator::lookup({0});
  TruthTable target = core::constant_table(0, false);

  std::uint64_t henry_size() const { return combine.recompute_cost().gate_count; }
  std::vector<std::uint8_t> message_a(std::uint64_t q) const;
  std::vector<std::uint8_t> message_b(std::uint64_t q) const;
  bool run(std::uint64_t x, std::uint64_t r) const;
  void check_shape() const;  // kMalformed on inconsistent tables
};

struct InputRandomness {
  std::uint64_t x;
  std::uint64_t r;
  bool operator==(const InputRandomness&) const = default;
};

struct IhAudit {
  std::uint64_t pairs_checked = 0;
  std::vector<InputRandomness> wrong;
  bool marginal_a_fixed = true;  // same query distribution for every x
  bool marginal_b_fixed = true;
  bool uniform_a = true;  // uniform over the whole query space
  bool uniform_b = true;

  bool correct() const { return wrong.empty(); }
  bool private_() const { return marginal_a_fixed && marginal_b_fixed; }
};

IhAudit audit_ih(const IhScheme& scheme, int jobs = 1);

// Henry queries x xor r and r; the oracles answer with the BSM messages and
// Henry runs Carol. Rejects a protocol that does not compute g(x xor y).
IhScheme xor_bsm_to_ih(const BsmProtocol& protocol, const TruthTable& g);

// Copy with one oracle answer altered (first symbol shifted by one).
IhScheme corrupt_answer(const IhScheme& scheme, bool oracle_b, std::uint64_t query);

// A Henry input family for the split-hide route: each input x is split with
// randomness r into a pair of instance texts.
struct SplitFamily {
  std::string name;
  int n = 0;
  std::uint64_t randomness_count = 1;
  std::function<std::pair<std::string, std::string>(std::uint64_t x, std::uint64_t r)> split;
  std::function<bool(std::uint64_t x)> target;
  // Language of split pairs, used to build an oracle protocol.
  std::function<bool(const std::string& a, const std::string& b)> language;
};

// Distinct split parts seen over all (x, r), sorted, so part texts map to
// query indices.
struct SplitQueryIndex {
  std::vector<std::string> parts_a;
  std::vector<std::string> parts_b;
  int query_bits = 0;  // common width for both sides
  std::uint64_t index_a(const std::string& s) const;
  std::uint64_t index_b(const std::string& s) const;
};

SplitQueryIndex index_split_queries(const SplitFamily& family);

// Lookup protocol for the split language over indexed parts; unused
// indices map to 0.
BsmProtocol split_language_lookup(const SplitFamily& family, const SplitQueryIndex& index);

// SAT with n variables (inputs are subsets of the clause list) or 3COL on n
// vertices (inputs are edge subsets); r ranks a permutation of [2N].
SplitFamily split_family(splithide::ReductionId id, int n);
// Sends x to oracle A unchanged: correct but not private.
SplitFamily identity_split_family(int n);

// Refuses (kRejected) when the query marginals depend on the input.
IhScheme splithide_bsm_to_ih(const SplitFamily& family, const SplitQueryIndex& index,
                             const BsmProtocol& protocol);

struct CollisionWitness {
  InputRandomness first;
  InputRandomness second;
  std::uint64_t query_a;
  std::uint64_t query_b;
};

std::optional<CollisionWitness> find_query_collision(const IhScheme& scheme);

struct IhToBsmResult {
  BsmProtocol protocol;
  TruthTable target;               // g(z) on reachable pairs, Carol's value elsewhere
  std::vector<std::uint8_t> reachable;  // indexed like target
};

// Needs equal query widths and uniform marginals. A collision is rejected
// with the witness in the error text.
IhToBsmResult ih_to_bsm(const IhScheme& scheme);

// Perfectly smooth 2-query code. The decoder reads positions j1, j2 chosen
// from (i, r) and runs `decode` over (j1 bits || C(j1), j2 bits || C(j2)).
struct SmoothCode {
  std::string name;
  int message_bits = 0;
  std::uint64_t length = 0;          // N
  std::uint32_t symbol_length = 1;   // a
  std::function<std::vector<std::uint8_t>(std::uint64_t message)> encode;  // N * a symbols
  std::uint64_t randomness_count = 1;
  std::function<std::pair<std::uint64_t, std::uint64_t>(int index, std::uint64_t r)> queries;
  CarolEvaluator decode = CarolEvaluator::lookup({0});

  int query_bits() const;
};

struct SmoothAudit {
  std::uint64_t decodings_checked = 0;
  std::uint64_t decoding_errors = 0;
  bool smooth = true;
};

SmoothAudit audit_smooth_code(const SmoothCode& code);

SmoothCode hadamard_code(int n);
SmoothCode repetition_code();
// Hadamard with the first query pinned to 0 half the time.
SmoothCode biased_hadamard_code(int n);
SmoothCode smooth_code_by_name(const std::string& name, int n);

struct PirScheme {
  SmoothCode code;
  std::vector<std::uint64_t> query_a;  // [i * randomness_count + r]
  std::vector<std::uint64_t> query_b;

  std::uint64_t database_length() const { return static_cast<std::uint64_t>(code.message_bits); }
  std::vector<std::uint8_t> answer(std::uint64_t database, std::uint64_t q) const;
  bool run(std::uint64_t database, int index, std::uint64_t r) const;
};

struct PirAudit {
  std::uint64_t runs_checked = 0;
  std::uint64_t errors = 0;
  bool index_hidden = true;
};

PirAudit audit_pir(const PirScheme& pir);

PirScheme smooth_ldc_to_pir(const SmoothCode& code);
IhScheme pir_to_ih(const PirScheme& pir, const TruthTable& f);

// Documents: "bsmwb-ih-scheme" carries the query maps next to the oracle
// tables; "bsmwb-pir-scheme" names a built-in smooth code and rebuilds the
// tables on load.
core::Json ih_scheme_to_json(const IhScheme& s);
IhScheme ih_scheme_from_json(const core::Json& j);
core::Json pir_scheme_to_json(const PirScheme& p);
PirScheme pir_scheme_from_json(const core::Json& j);

std::vector<std::uint32_t> permutation_unrank(std::uint32_t size, std::uint64_t rank);

}  // namespace bsmwb::bridges
