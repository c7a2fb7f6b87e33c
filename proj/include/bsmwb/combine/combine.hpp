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
#include <vector>

#include "bsmwb/core/circuit.hpp"
#include "bsmwb/core/protocol.hpp"
#include "bsmwb/core/truth_table.hpp"

namespace bsmwb::combine {

using core::BooleanCircuit;
using core::BsmProtocol;
using core::TruthTable;

// A conjunction of literals as two variable masks (bit i is z_{i+1}).
struct Term {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;

  int width() const;
  bool satisfied_by(std::uint64_t z) const {
    return (z & pos) == pos && (z & neg) == 0;
  }
  auto operator<=>(const Term&) const = default;
};

class Dnf {
 public:
  Dnf(int variable_count, std::vector<Term> terms);

  // Literal lists use the DIMACS convention: +i is z_i, -i is its negation.
  static Dnf from_literals(int variable_count, const std::vector<std::vector<int>>& terms);

  int variable_count() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  int width() const;
  bool monotone() const;
  // +1 / -1 per variable when no variable occurs with both signs; 0 marks
  // unused variables.
  std::optional<std::vector<int>> unate_orientation() const;

  bool evaluate(std::uint64_t z) const;
  TruthTable to_table() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

// Minimal true points of a monotone g, as positive terms.
Dnf monotone_dnf(const TruthTable& g);
// One full-width term per true point.
Dnf canonical_dnf(const TruthTable& g);

// Appends message pieces and Carol gates for a composite protocol. Pieces
// are written left to right in the order they were added.
class ProtocolBuilder {
 public:
  using Writer = std::function<void(std::uint64_t input, std::uint8_t* out)>;

  explicit ProtocolBuilder(int n) : n_(n) {}

  int arity() const { return n_; }
  std::uint32_t alice_length() const { return alice_length_; }
  std::uint32_t bob_length() const { return bob_length_; }
  std::uint32_t add_alice(std::uint32_t length, Writer w);
  std::uint32_t add_bob(std::uint32_t length, Writer w);
  // Alice sends x verbatim; cached so repeated requests share one copy.
  std::uint32_t alice_raw();
  std::uint32_t bob_raw();
  BooleanCircuit& carol() { return carol_; }
  // Carol's wires for z = x or y over the raw inputs; built once.
  const std::vector<BooleanCircuit::Wire>& or_inputs();

  BsmProtocol build(BooleanCircuit::Wire output) &&;

 private:
  struct Piece {
    std::uint32_t offset;
    std::uint32_t length;
    Writer write;
  };

  int n_;
  std::vector<Piece> alice_;
  std::vector<Piece> bob_;
  std::uint32_t alice_length_ = 0;
  std::uint32_t bob_length_ = 0;
  std::optional<std::uint32_t> alice_raw_;
  std::optional<std::uint32_t> bob_raw_;
  std::vector<BooleanCircuit::Wire> z_or_;
  BooleanCircuit carol_;
};

// g(x or y) for a unate-term DNF g. Each term splits its positive set P as
// T1 + T2 over all 2^|P| ways; negative literals stay on both sides because
// not(x_i or y_i) = not x_i and not y_i. A split is keyed on the side with
// fewer positive literals (ties to Alice); for each key the other side sends
// the OR of its matching parts, and Carol ANDs key with aggregate.
struct WidthPlanStats {
  std::uint64_t alice_keys = 0;
  std::uint64_t bob_keys = 0;
  std::uint64_t and_gates = 0;
};

BooleanCircuit::Wire attach_width_engine(ProtocolBuilder& builder, const Dnf& g,
                                         WidthPlanStats* stats = nullptr);

BsmProtocol dnf_protocol_and(const Dnf& g);
BsmProtocol monotone_width_protocol_or(const Dnf& g, int w);
BooleanCircuit::Wire attach_monotone(ProtocolBuilder& builder, const TruthTable& g);
BsmProtocol monotone_protocol_or(const TruthTable& g);

// protocol_and(g)(x, y) = not protocol_or(g')(not x, not y) with
// g'(z) = not g(not z).
BsmProtocol dual_and_protocol(const TruthTable& g,
                              const std::function<BsmProtocol(const TruthTable&)>& or_builder);
TruthTable dual_function(const TruthTable& g);

struct AlternationDecomposition {
  bool base = false;
  std::vector<TruthTable> parts;
};

// a(x) by DP over the cube; a(1^n) is the alternation of g.
std::vector<int> alternation_levels(const TruthTable& g);
AlternationDecomposition alternation_decompose(const TruthTable& g);
// XOR of one monotone_protocol_or run per part.
BsmProtocol alternation_protocol_or(const TruthTable& g);

std::vector<Dnf> weight_slice_unate(const TruthTable& g);

struct CoveringCode {
  int n = 0;
  int r = 0;
  std::vector<std::uint64_t> codewords;

  // Every point within distance r of some codeword.
  bool covers() const;
  std::string to_text() const;
  static CoveringCode from_text(const std::string& text);
};

CoveringCode greedy_covering_code(int n, int r);
// ceil((1 - 1/sqrt 2) n)
int default_covering_radius(int n);

// g_{i,j}: terms g(c_i + S) and Phi_{i,S} over every |S| = j.
Dnf covering_slice(const TruthTable& g, std::uint64_t center, int j);

struct CoveringProtocolOptions {
  int jobs = 1;
};

BsmProtocol covering_code_protocol_or(const TruthTable& g, const CoveringCode& code,
                                      const CoveringProtocolOptions& options = {});

// Sizes without materializing the message tables.
struct CoveringSizeEstimate {
  std::uint64_t alice_length = 0;
  std::uint64_t bob_length = 0;
  std::uint64_t carol_gates = 0;
};
CoveringSizeEstimate covering_code_size(const TruthTable& g, const CoveringCode& code);

// Evaluator g(x_L, x_R) = Carol(Alice(x_L || 0), Bob(0 || x_R)) with the
// half-input message tables hardwired.
struct CircuitEvaluator {
  int n = 0;
  std::uint32_t modulus = 2;
  std::uint32_t alice_length = 0;
  std::uint32_t bob_length = 0;
  std::vector<std::uint8_t> alice_rows;  // Alice(x_L || 0) for each x_L
  std::vector<std::uint8_t> bob_rows;    // Bob(0 || x_R) for each x_R
  core::CarolEvaluator carol;
  std::uint64_t size = 0;  // 2^(n/2) (|A| + |B|) + Carol gates

  bool evaluate(std::uint64_t z) const;
};

CircuitEvaluator bsm_to_circuit(const BsmProtocol& protocol);

// Alice and Bob send parities; Carol XORs.
BsmProtocol parity_xor_protocol(int n);

// C(n, <= k)
std::uint64_t binomial_prefix(int n, int k);

}  // namespace bsmwb::combine
