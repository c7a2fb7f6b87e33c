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
#include <bit>

#include "bsmwb/combine/combine.hpp"
#include "bsmwb/core/error.hpp"

namespace bsmwb::combine {

// Increasing index order visits every predecessor x - e_i before x.
std::vector<int> alternation_levels(const TruthTable& g) {
  require(g.arity() <= 20, "alternation DP supports n <= 20");
  std::vector<int> a(g.size(), 0);
  for (std::uint64_t x = 1; x < g.size(); ++x) {
    int best = 0;
    for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) {
      const std::uint64_t pred = x & ~(rest & -rest);
      best = std::max(best, a[pred] + (g[pred] != g[x] ? 1 : 0));
    }
    a[x] = best;
  }
  return a;
}

AlternationDecomposition alternation_decompose(const TruthTable& g) {
  const auto a = alternation_levels(g);
  const int k = a.back();
  AlternationDecomposition d;
  d.base = g[0];
  for (int i = 1; i <= k; ++i) {
    std::vector<std::uint8_t> v(g.size());
    for (std::uint64_t x = 0; x < g.size(); ++x) v[x] = a[x] >= i;
    d.parts.emplace_back(g.arity(), std::move(v));
  }
  return d;
}

BsmProtocol alternation_protocol_or(const TruthTable& g) {
  const auto d = alternation_decompose(g);
  ProtocolBuilder b(g.arity());
  std::vector<BooleanCircuit::Wire> terms;
  for (const auto& part : d.parts) terms.push_back(attach_monotone(b, part));
  auto& c = b.carol();
  auto out = c.add_xor(std::move(terms));
  if (d.base) out = c.add_not(out);
  return std::move(b).build(out);
}

std::vector<Dnf> weight_slice_unate(const TruthTable& g) {
  const int n = g.arity();
  require(n <= 16, "weight slices support n <= 16");
  const std::uint64_t all = g.size() - 1;
  std::vector<std::vector<Term>> slices(n + 1);
  for (std::uint64_t w = 0; w < g.size(); ++w) {
    if (!g[w]) continue;
    const int i = std::popcount(w);
    if (2 * i <= n) {
      slices[i].push_back({w, 0});
    } else {
      slices[i].push_back({0, all & ~w});
    }
  }
  std::vector<Dnf> out;
  for (auto& s : slices) out.emplace_back(n, std::move(s));
  return out;
}

}  // namespace bsmwb::combine
