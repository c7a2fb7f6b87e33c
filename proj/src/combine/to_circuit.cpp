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

#include <bit>
#include <span>

#include "bsmwb/combine/combine.hpp"
#include "bsmwb/core/error.hpp"

namespace bsmwb::combine {

CircuitEvaluator bsm_to_circuit(const BsmProtocol& protocol) {
  const int n = protocol.input_arity();
  require(n % 2 == 0, "bsm_to_circuit needs an even input length; pad the function first");
  const int h = n / 2;
  const std::uint64_t half = std::uint64_t{1} << h;
  CircuitEvaluator e{n,
                     protocol.modulus(),
                     protocol.alice_length(),
                     protocol.bob_length(),
                     {},
                     {},
                     protocol.carol(),
                     0};
  for (std::uint64_t v = 0; v < half; ++v) {
    auto a = protocol.alice(v);
    auto b = protocol.bob(v << h);
    e.alice_rows.insert(e.alice_rows.end(), a.begin(), a.end());
    e.bob_rows.insert(e.bob_rows.end(), b.begin(), b.end());
  }
  e.size = half * (std::uint64_t{e.alice_length} + e.bob_length) +
           protocol.carol().recompute_cost().gate_count;
  return e;
}

bool CircuitEvaluator::evaluate(std::uint64_t z) const {
  const int h = n / 2;
  const std::uint64_t lo = z & ((std::uint64_t{1} << h) - 1);
  const std::uint64_t hi = z >> h;
  std::span<const std::uint8_t> a(alice_rows.data() + lo * alice_length, alice_length);
  std::span<const std::uint8_t> b(bob_rows.data() + hi * bob_length, bob_length);
  return carol.evaluate(a, b, modulus);
}

BsmProtocol parity_xor_protocol(int n) {
  ProtocolBuilder b(n);
  auto parity = [](std::uint64_t x, std::uint8_t* out) { *out = std::popcount(x) & 1; };
  b.add_alice(1, parity);
  b.add_bob(1, parity);
  auto& c = b.carol();
  return std::move(b).build(c.add_xor({c.alice(0), c.bob(0)}));
}

}  // namespace bsmwb::combine
