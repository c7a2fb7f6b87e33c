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

#include <algorithm>
#include <variant>

#include "bsmwb/combine/combine.hpp"
#include "bsmwb/core/error.hpp"

namespace bsmwb::combine {

// Minterms of width at most floor(2n/3) go through the width engine. Wider
// ones are few; both parties also send their raw inputs and Carol forms
// z = x or y and tests those terms herself.
BooleanCircuit::Wire attach_monotone(ProtocolBuilder& b, const TruthTable& g) {
  const int n = g.arity();
  require(n == b.arity(), "function arity differs from the protocol arity");
  const Dnf all = monotone_dnf(g);
  const int cut = (2 * n) / 3;
  std::vector<Term> narrow, wide;
  for (const auto& t : all.terms()) (t.width() <= cut ? narrow : wide).push_back(t);

  auto& c = b.carol();
  std::vector<BooleanCircuit::Wire> disjuncts;
  if (!narrow.empty()) disjuncts.push_back(attach_width_engine(b, Dnf(n, narrow)));
  if (!wide.empty()) {
    const auto z = b.or_inputs();
    for (const auto& t : wide) {
      std::vector<BooleanCircuit::Wire> lits;
      for (int i = 0; i < n; ++i) {
        if ((t.pos >> i) & 1) lits.push_back(z[i]);
      }
      disjuncts.push_back(c.add_and(std::move(lits)));
    }
  }
  return c.add_or(std::move(disjuncts));
}

BsmProtocol monotone_protocol_or(const TruthTable& g) {
  ProtocolBuilder b(g.arity());
  auto out = attach_monotone(b, g);
  return std::move(b).build(out);
}

TruthTable dual_function(const TruthTable& g) {
  const std::uint64_t all = g.size() - 1;
  std::vector<std::uint8_t> v(g.size());
  for (std::uint64_t z = 0; z < g.size(); ++z) v[z] = !g[all & ~z];
  return TruthTable(g.arity(), std::move(v));
}

BsmProtocol dual_and_protocol(const TruthTable& g,
                              const std::function<BsmProtocol(const TruthTable&)>& or_builder) {
  const BsmProtocol p = or_builder(dual_function(g));
  const auto* inner = std::get_if<BooleanCircuit>(&p.carol().payload());
  require(inner != nullptr, "dualization needs a circuit Carol");

  const std::uint64_t count = p.input_count();
  auto flip_rows = [count](const std::vector<std::uint8_t>& table, std::uint32_t length) {
    std::vector<std::uint8_t> out(table.size());
    for (std::uint64_t x = 0; x < count; ++x) {
      const std::uint64_t src = (count - 1) & ~x;
      std::copy_n(table.begin() + src * length, length, out.begin() + x * length);
    }
    return out;
  };
  BooleanCircuit c;
  auto w = c.embed(*inner, 0, 0);
  c.set_output(c.add_not(w));
  return BsmProtocol(p.input_arity(), 2, p.alice_length(),
                     flip_rows(p.alice_table(), p.alice_length()), p.bob_length(),
                     flip_rows(p.bob_table(), p.bob_length()),
                     core::CarolEvaluator::circuit(std::move(c))
                         .with_offsets(p.carol().alice_offset(), p.carol().bob_offset()));
}

}  // namespace bsmwb::combine
