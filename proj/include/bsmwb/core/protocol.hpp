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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bsmwb/core/circuit.hpp"
#include "bsmwb/core/polynomial.hpp"
#include "bsmwb/core/truth_table.hpp"

namespace bsmwb::core {

struct CarolCost {
  std::uint64_t gate_count = 0;
  std::optional<std::uint64_t> degree;
  std::optional<std::uint64_t> depth;
  std::optional<std::uint64_t> multiplication_gates;

  bool operator==(const CarolCost&) const = default;
};

// Carol computes a polynomial over Z_m of the concatenated messages and maps
// the value through a predicate Z_m -> {0,1}.
struct PolynomialCarol {
  ModularPolynomial poly;
  std::vector<std::uint8_t> predicate;  // predicate[c] for c in Z_m
};

// Explicit table indexed by the two messages read as base-m numbers,
// Alice's symbols first (symbol 0 least significant).
struct LookupCarol {
  std::vector<std::uint8_t> table;
};

struct OpaqueCarol {
  std::string name;
  std::function<bool(std::span<const std::uint8_t>, std::span<const std::uint8_t>)> fn;
};

enum class CarolKind { kCircuit, kPolynomial, kLookup, kOpaque };

std::string carol_kind_name(CarolKind kind);

class CarolEvaluator {
 public:
  using Payload = std::variant<BooleanCircuit, PolynomialCarol, LookupCarol, OpaqueCarol>;

  CarolEvaluator(Payload payload, CarolCost declared);

  // Convenience constructors that fill in the cost from the payload.
  static CarolEvaluator circuit(BooleanCircuit c);
  static CarolEvaluator polynomial(ModularPolynomial p, std::vector<std::uint8_t> predicate);
  static CarolEvaluator lookup(std::vector<std::uint8_t> table);
  static CarolEvaluator opaque(OpaqueCarol o, CarolCost declared);

  CarolKind kind() const;
  const Payload& payload() const { return payload_; }
  const CarolCost& declared_cost() const { return declared_; }
  bool audited() const { return kind() != CarolKind::kOpaque; }

  // Carol reads each message starting at these offsets; the skipped prefix
  // is ignored. Used when a message carries extra fields Carol never reads.
  CarolEvaluator with_offsets(std::uint32_t alice_offset, std::uint32_t bob_offset) const;
  std::uint32_t alice_offset() const { return alice_offset_; }
  std::uint32_t bob_offset() const { return bob_offset_; }

  // Symbols must already be in the alphabet; `modulus` drives lookup indexing.
  bool evaluate(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                std::uint32_t modulus) const;

  // Cost recomputed from the payload; opaque Carols return the declared cost.
  CarolCost recompute_cost() const;

 private:
  Payload payload_;
  CarolCost declared_;
  std::uint32_t alice_offset_ = 0;
  std::uint32_t bob_offset_ = 0;
};

struct Message {
  std::uint32_t modulus = 2;
  std::vector<std::uint8_t> symbols;
};

// f(x, y) = Carol(Alice(x), Bob(y)) for x, y in {0,1}^n. Message tables are
// stored flattened: row x occupies [x * length, (x + 1) * length).
class BsmProtocol {
 public:
  BsmProtocol(int input_arity, std::uint32_t modulus, std::uint32_t alice_length,
              std::vector<std::uint8_t> alice_table, std::uint32_t bob_length,
              std::vector<std::uint8_t> bob_table, CarolEvaluator carol);

  // Builds both tables by calling the maps on every input.
  static BsmProtocol from_maps(int input_arity, std::uint32_t modulus,
                               const std::function<std::vector<std::uint8_t>(std::uint64_t)>& alice,
                               const std::function<std::vector<std::uint8_t>(std::uint64_t)>& bob,
                               CarolEvaluator carol);

  int input_arity() const { return n_; }
  std::uint64_t input_count() const { return std::uint64_t{1} << n_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t alice_length() const { return alice_length_; }
  std::uint32_t bob_length() const { return bob_length_; }
  const std::vector<std::uint8_t>& alice_table() const { return alice_table_; }
  const std::vector<std::uint8_t>& bob_table() const { return bob_table_; }
  const CarolEvaluator& carol() const { return carol_; }

  std::span<const std::uint8_t> alice(std::uint64_t x) const {
    return {alice_table_.data() + x * alice_length_, alice_length_};
  }
  std::span<const std::uint8_t> bob(std::uint64_t y) const {
    return {bob_table_.data() + y * bob_length_, bob_length_};
  }
  Message alice_message(std::uint64_t x) const;
  Message bob_message(std::uint64_t y) const;

  bool run(std::uint64_t x, std::uint64_t y) const {
    return carol_.evaluate(alice(x), bob(y), modulus_);
  }

  // Throws kMalformed if any table symbol is outside Z_m or the Carol
  // payload does not fit the message shape.
  void check_well_formed() const;

 private:
  int n_;
  std::uint32_t modulus_;
  std::uint32_t alice_length_;
  std::vector<std::uint8_t> alice_table_;
  std::uint32_t bob_length_;
  std::vector<std::uint8_t> bob_table_;
  CarolEvaluator carol_;
};

// Alice sends x, Bob sends y, Carol looks f up.
BsmProtocol lookup_protocol(const TruthTable& f);

}  // namespace bsmwb::core
