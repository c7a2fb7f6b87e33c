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

#include "bsmwb/polydeg/polydeg.hpp"

namespace bsmwb::polydeg {

ModularPolynomial mobius_f2(const TruthTable& table, const core::Limits& limits) {
  limits.check(table.arity(), "Mobius transform");
  std::vector<std::uint8_t> a = table.values();
  const int k = table.arity();
  for (int i = 0; i < k; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t s = 0; s < a.size(); ++s) {
      if (s & bit) a[s] ^= a[s ^ bit];
    }
  }
  ModularPolynomial p(2, static_cast<std::uint32_t>(k));
  for (std::uint64_t s = 0; s < a.size(); ++s) {
    if (!a[s]) continue;
    ModularPolynomial::Monomial mono;
    for (int i = 0; i < k; ++i) {
      if ((s >> i) & 1) mono.push_back(static_cast<std::uint32_t>(i));
    }
    p.add_term(std::move(mono), 1);
  }
  return p;
}

}  // namespace bsmwb::polydeg
