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

#include "bsmwb/splithide/instances.hpp"

namespace bsmwb::splithide {

enum class ReductionId { kSat, k3Col, kPartition };

std::string reduction_name(ReductionId id);
ReductionId reduction_from_name(const std::string& name);

// The pair (a(x), b(x)) with the seed that produced it. The fingerprint is
// the statistic the privacy checker samples: the N selected indices of
// [2N] (1-based, ascending) for SAT and 3COL, the y vector for PARTITION.
template <class Part>
struct ReductionOutput {
  Part alice_part;
  Part bob_part;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> fingerprint;

  bool operator==(const ReductionOutput&) const = default;
};

// All nonempty clauses of width <= 3 over n variables: variable tuples in
// lexicographic order, then sign patterns (bit k set = k-th literal negated).
std::vector<Clause> all_clauses(int n);
std::uint64_t clause_count(int n);  // 2n + 4 C(n,2) + 8 C(n,3)

// phi's variables are x_1..x_n; escape variable y_j is DIMACS variable n + j.
ReductionOutput<Cnf> reduce_sat(const Cnf& phi, std::uint64_t seed, int max_variables = 16);
// Same map with the permutation of [2N] given directly (0-based images);
// the seed-driven form draws it from Rng(seed). Exact privacy sweeps
// enumerate permutations through this entry point.
ReductionOutput<Cnf> reduce_sat_permuted(const Cnf& phi, const std::vector<std::uint32_t>& perm,
                                         int max_variables = 16);

// Gadget j (1-based, j <= 2N) uses labels n + 6(j-1) + 1..6 for
// a_j, b_j, c_j, a'_j, b'_j, c'_j. Vertex pairs are numbered 1..N in
// lexicographic order.
ReductionOutput<Graph> reduce_3col(const Graph& g, std::uint64_t seed);
ReductionOutput<Graph> reduce_3col_permuted(const Graph& g, const std::vector<std::uint32_t>& perm);
std::uint32_t gadget_vertex(std::uint32_t n, std::uint32_t j, int slot);  // slot 0..5

// Input must have exactly n elements, each < 2^n.
ReductionOutput<IntMultiset> reduce_partition(const IntMultiset& s, std::uint64_t seed);
BigInt partition_modulus(int n);  // p = n 2^n, even so that p/2 is whole

// Two-section text document for one reduction run:
//   reduction sat
//   seed 7
//   fingerprint 1 4 5
//   [alice]
//   <part in its native format>
//   [bob]
//   <part>
// Parts use DIMACS, edge lists or integer lines according to the reduction.
struct ReductionDocument {
  ReductionId id = ReductionId::kSat;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> fingerprint;
  std::string alice_text;
  std::string bob_text;

  std::string to_text() const;
  // Validates both parts by parsing them.
  static ReductionDocument from_text(const std::string& text);
};

ReductionDocument make_document(ReductionId id, const ReductionOutput<Cnf>& out);
ReductionDocument make_document(ReductionId id, const ReductionOutput<Graph>& out);
ReductionDocument make_document(ReductionId id, const ReductionOutput<IntMultiset>& out);

}  // namespace bsmwb::splithide
