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

#include "bsmwb/core/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>

#include "bsmwb/core/error.hpp"

namespace bsmwb::core {

int Limits::effective_bits() const {
  int bits = exhaustive_bits;
  const char* env = honor_env ? std::getenv("BSMWB_LIMIT_BITS") : nullptr;
  if (env) {
    char* end = nullptr;
    long ceiling = std::strtol(env, &end, 10);
    if (end != env && ceiling >= 0) bits = std::min<long>(bits, ceiling);
  }
  return bits;
}

void Limits::check(int bits, const std::string& what) const {
  if (bits > effective_bits()) {
    fail(ErrorKind::kCapacity, what + " needs " + std::to_string(bits) +
                                   " input bits, limit is " +
                                   std::to_string(effective_bits()));
  }
}

TruthTable::TruthTable(int arity, std::vector<std::uint8_t> values)
    : arity_(arity), values_(std::move(values)) {
  require(arity >= 0, "truth table arity must be nonnegative");
  require(arity < 40, "truth table arity too large");
  require(values_.size() == (std::uint64_t{1} << arity),
          "truth table length must be 2^arity");
  for (auto& v : values_) v = v ? 1 : 0;
}

TruthTable TruthTable::zeros(int arity) {
  require(arity >= 0 && arity < 40, "truth table arity out of range");
  return TruthTable(arity, std::vector<std::uint8_t>(std::uint64_t{1} << arity, 0));
}

std::uint64_t TruthTable::count_ones() const {
  return static_cast<std::uint64_t>(std::count(values_.begin(), values_.end(), 1));
}

std::string TruthTable::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve((values_.size() + 3) / 4);
  for (std::uint64_t i = 0; i < values_.size(); i += 4) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4 && i + b < values_.size(); ++b) {
      nibble |= static_cast<unsigned>(values_[i + b]) << b;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

TruthTable TruthTable::from_hex(int arity, const std::string& hex) {
  TruthTable t = zeros(arity);
  const std::uint64_t want = (t.size() + 3) / 4;
  std::string digits;
  for (char c : hex) {
    if (!std::isspace(static_cast<unsigned char>(c))) digits.push_back(c);
  }
  if (digits.size() != want) {
    fail(ErrorKind::kParse, "truth table hex has " + std::to_string(digits.size()) +
                                " digits, expected " + std::to_string(want));
  }
  for (std::uint64_t k = 0; k < digits.size(); ++k) {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(digits[k])));
    unsigned nibble;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<unsigned>(c - 'a' + 10);
    } else {
      fail(ErrorKind::kParse, std::string("bad hex digit '") + c + "'");
    }
    for (unsigned b = 0; b < 4; ++b) {
      std::uint64_t i = 4 * k + b;
      if (i < t.size()) {
        t.values_[i] = (nibble >> b) & 1;
      } else if ((nibble >> b) & 1) {
        fail(ErrorKind::kParse, "truth table hex has bits beyond 2^arity");
      }
    }
  }
  return t;
}

TruthTable tabulate(const std::function<bool(std::uint64_t)>& oracle, int k,
                    const Limits& limits) {
  limits.check(k, "tabulate");
  std::vector<std::uint8_t> values(std::uint64_t{1} << k);
  for (std::uint64_t i = 0; i < values.size(); ++i) values[i] = oracle(i) ? 1 : 0;
  return TruthTable(k, std::move(values));
}

TruthTable combined(const TruthTable& g, Combiner op) {
  const int n = g.arity();
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return tabulate(
      [&](std::uint64_t i) {
        std::uint64_t x = i & mask, y = i >> n;
        switch (op) {
          case Combiner::kOr:
            return g[x | y];
          case Combiner::kAnd:
            return g[x & y];
          case Combiner::kXor:
            return g[x ^ y];
        }
        return false;
      },
      2 * n, Limits::unbounded());
}

TruthTable parity_table(int n) {
  return tabulate([](std::uint64_t i) { return std::popcount(i) % 2 == 1; }, n, Limits::unbounded());
}

TruthTable and_table(int n) {
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  return tabulate([all](std::uint64_t i) { return i == all; }, n, Limits::unbounded());
}

TruthTable or_table(int n) {
  return tabulate([](std::uint64_t i) { return i != 0; }, n, Limits::unbounded());
}

TruthTable equality_table(int n) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return tabulate([n, mask](std::uint64_t i) { return (i & mask) == (i >> n); }, 2 * n,
                  Limits::unbounded());
}

TruthTable constant_table(int n, bool value) {
  return tabulate([value](std::uint64_t) { return value; }, n, Limits::unbounded());
}

bool is_monotone(const TruthTable& g) {
  for (std::uint64_t x = 0; x < g.size(); ++x) {
    if (!g[x]) continue;
    for (int i = 0; i < g.arity(); ++i) {
      if (!g[x | (std::uint64_t{1} << i)]) return false;
    }
  }
  return true;
}

}  // namespace bsmwb::core
