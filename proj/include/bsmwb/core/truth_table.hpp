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
#include <string>
#include <vector>

namespace bsmwb::core {

// Exhaustive-enumeration ceiling, in input bits. The default can be lowered
// or raised per call; the BSMWB_LIMIT_BITS environment variable is a hard
// ceiling nobody can raise.
struct Limits {
  int exhaustive_bits = 24;
  bool honor_env = true;

  // Internal tabulations of already-materialized tables skip the ceiling.
  static Limits unbounded() { return {64, false}; }

  // min(exhaustive_bits, BSMWB_LIMIT_BITS) when the variable is set.
  int effective_bits() const;
  void check(int bits, const std::string& what) const;
};

// A Boolean function on `arity` bits stored as its full value table.
// Variable x_1 is the least significant bit of the index: index = sum x_i 2^(i-1).
// For two-party functions f(x, y) on 2n bits, x occupies the low n bits.
class TruthTable {
 public:
  TruthTable(int arity, std::vector<std::uint8_t> values);

  static TruthTable zeros(int arity);

  int arity() const { return arity_; }
  std::uint64_t size() const { return values_.size(); }
  bool operator[](std::uint64_t index) const { return values_[index] != 0; }
  bool at(std::uint64_t x, std::uint64_t y) const {
    return values_[x | (y << (arity_ / 2))] != 0;
  }
  const std::vector<std::uint8_t>& values() const { return values_; }
  std::uint64_t count_ones() const;

  bool operator==(const TruthTable&) const = default;

  // Packed hex rendering: nibble k holds indices 4k..4k+3, LSB first.
  std::string to_hex() const;
  static TruthTable from_hex(int arity, const std::string& hex);

 private:
  int arity_;
  std::vector<std::uint8_t> values_;
};

TruthTable tabulate(const std::function<bool(std::uint64_t)>& oracle, int k,
                    const Limits& limits = {});

// f(x, y) = g(x op y) over 2n bits, for the three bitwise combiners.
enum class Combiner { kOr, kAnd, kXor };
TruthTable combined(const TruthTable& g, Combiner op);

// Common functions used across modules and tests.
TruthTable parity_table(int n);
TruthTable and_table(int n);
TruthTable or_table(int n);
TruthTable equality_table(int n);  // EQ on 2n bits: x == y
TruthTable constant_table(int n, bool value);

bool is_monotone(const TruthTable& g);

}  // namespace bsmwb::core
