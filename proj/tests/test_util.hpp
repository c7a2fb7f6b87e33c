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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bsmwb/core/rng.hpp"
#include "bsmwb/core/truth_table.hpp"
#include "bsmwb/splithide/instances.hpp"

namespace bsmwb::testing {

inline core::TruthTable random_table(core::Rng& rng, int arity) {
  std::vector<std::uint8_t> v(std::uint64_t{1} << arity);
  for (auto& b : v) b = rng.coin();
  return core::TruthTable(arity, std::move(v));
}

// Upward closure of a few random seed points.
inline core::TruthTable random_monotone(core::Rng& rng, int arity, int seeds) {
  const std::uint64_t size = std::uint64_t{1} << arity;
  std::vector<std::uint8_t> v(size, 0);
  for (int s = 0; s < seeds; ++s) {
    const std::uint64_t p = rng.uniform(size);
    for (std::uint64_t z = 0; z < size; ++z) {
      if ((z & p) == p) v[z] = 1;
    }
  }
  return core::TruthTable(arity, std::move(v));
}

inline splithide::Cnf random_3cnf(core::Rng& rng, int n, int clauses) {
  splithide::Cnf f(n, {});
  for (int c = 0; c < clauses; ++c) {
    auto perm = rng.permutation(static_cast<std::uint32_t>(n));
    splithide::Clause cl;
    for (int k = 0; k < std::min(3, n); ++k) {
      const int v = static_cast<int>(perm[k]) + 1;
      cl.push_back(rng.coin() ? v : -v);
    }
    f.add_clause(cl);
  }
  return f;
}

inline splithide::Graph random_graph(core::Rng& rng, std::uint32_t n) {
  auto g = splithide::Graph::on_vertices(n);
  for (std::uint32_t u = 1; u <= n; ++u) {
    for (std::uint32_t v = u + 1; v <= n; ++v) {
      if (rng.coin()) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace bsmwb::testing
