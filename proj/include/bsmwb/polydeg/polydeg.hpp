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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsmwb/core/polynomial.hpp"
#include "bsmwb/core/protocol.hpp"
#include "bsmwb/core/truth_table.hpp"

namespace bsmwb::polydeg {

using core::BsmProtocol;
using core::ModularPolynomial;
using core::TruthTable;

// Unique multilinear F2 polynomial agreeing with `table`; variable i is
// input bit i (0-based, bit i of the table index).
ModularPolynomial mobius_f2(const TruthTable& table, const core::Limits& limits = {});

// Coordinates of one party's half grouped into consecutive blocks of t.
std::vector<std::vector<int>> party_blocks(int n, int t);

// Each party sends Z_J = prod_{i in J} z_i for every nonempty J inside each
// of its blocks (J in increasing mask order, blocks left to right). Carol is
// the Mobius polynomial of f with each monomial rewritten over the Z_J.
// When the last block holds at most t/2 coordinates the monomials touching
// every block on both sides would exceed ceil(2n/t); they are folded into
// extra symbols inside the ceil(n/t)(2^t - 1) budget (rank-one pieces over
// F2), so the two parties' lengths can differ.
BsmProtocol degree_reduce_protocol(const TruthTable& f, int t);

// ceil(log2(m / (4n))) for a per-party message budget m.
int block_size_for_budget(int n, std::uint64_t m);

// P(z, w) = sum c_ij z_i w_j + sum d_i z_i + sum e_j w_j + r over F2.
struct Idg1Form {
  int m_a = 0;
  int m_b = 0;
  std::vector<std::uint8_t> c;  // row-major m_a x m_b
  std::vector<std::uint8_t> d;
  std::vector<std::uint8_t> e;
  std::uint8_t r = 0;

  bool evaluate(std::uint32_t z, std::uint32_t w) const;  // bit i of z is z_i
  ModularPolynomial to_polynomial() const;
};

struct Idg1Certificate {
  std::uint64_t map_pairs_examined = 0;
  std::uint64_t forms_per_pair = 0;  // 2^(m^2 + 2m + 1)
  bool reverse_order = false;
};

struct Idg1Result {
  std::optional<BsmProtocol> protocol;
  std::optional<Idg1Form> form;
  std::vector<std::uint32_t> alice_map;  // x -> m-bit message
  std::vector<std::uint32_t> bob_map;
  Idg1Certificate certificate;  // filled on exhaustion
};

struct Idg1Options {
  std::uint64_t max_map_pairs = std::uint64_t{1} << 26;
  bool reverse_order = false;
  int jobs = 1;
};

// Enumerates every pair of message maps {0,1}^n -> {0,1}^m and, for each,
// decides by Gaussian elimination over F2 whether some individual-degree-1
// form makes P(A(x), B(y)) = f(x, y) on all pairs. The first pair in
// enumeration order wins; among forms, the one with all free coefficients 0.
Idg1Result search_idg1_protocol(const TruthTable& f, int m, const Idg1Options& options = {});

struct DegreeBoundReport {
  int n = 0;
  std::uint32_t m = 0;  // max message length
  std::uint64_t degree = 0;
  double bound = 0;  // n / log2(m + 1)
  bool computes_eq = false;
  bool holds = true;
  bool falsification = false;  // computes EQ yet violates the bound
};

DegreeBoundReport check_degree_bounds(const BsmProtocol& protocol);

// S-matching vector family over Z_6 with S = {1, 3, 4}.
class MvFamily {
 public:
  static constexpr std::array<std::uint8_t, 3> kS = {1, 3, 4};

  MvFamily(int k, std::vector<std::vector<std::uint8_t>> u,
           std::vector<std::vector<std::uint8_t>> v);

  int dimension() const { return k_; }
  std::size_t size() const { return u_.size(); }
  const std::vector<std::vector<std::uint8_t>>& u() const { return u_; }
  const std::vector<std::vector<std::uint8_t>>& v() const { return v_; }

  static bool in_s(std::uint32_t c);
  static std::uint32_t inner(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b);

  std::string to_text() const;
  static MvFamily from_text(const std::string& text);

 private:
  int k_;
  std::vector<std::vector<std::uint8_t>> u_;
  std::vector<std::vector<std::uint8_t>> v_;
};

struct MvSearchOptions {
  std::uint64_t max_nodes = 200'000'000;
};

struct MvSearchResult {
  std::optional<MvFamily> family;
  std::uint64_t nodes = 0;
};

// Backtracking over Z_6^k in lexicographic order with u_1 < u_2 < ... (index
// order is a symmetry) and forward checking of the remaining domains. An
// empty result is a definitive "no family of this size in dimension k".
MvSearchResult find_mv_family(std::size_t size, int k, const MvSearchOptions& options = {});

// F4 = F2[w]/(w^2 + w + 1), elements as two bits (bit0 + bit1 * w).
std::uint8_t f4_mul(std::uint8_t a, std::uint8_t b);
// q(c) = (c mod 2, [c mod 3 != 0]) read as an F4 element.
std::uint8_t mv_q(std::uint32_t c);
// q(c)^3 + 1 in F4, which lies in {0, 1}.
std::uint8_t mv_predicate(std::uint32_t c);

// Alice sends u_x, Bob sends v_y, Carol outputs mv_predicate(<a, b> mod 6).
BsmProtocol mv_equality_protocol(const MvFamily& family);

}  // namespace bsmwb::polydeg
