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

#include "bsmwb/splithide/reductions.hpp"

#include <algorithm>
#include <cstdlib>

#include "bsmwb/core/error.hpp"
#include "bsmwb/core/rng.hpp"

namespace bsmwb::splithide {

std::string reduction_name(ReductionId id) {
  switch (id) {
    case ReductionId::kSat:
      return "sat";
    case ReductionId::k3Col:
      return "3col";
    case ReductionId::kPartition:
      return "partition";
  }
  return "?";
}

ReductionId reduction_from_name(const std::string& name) {
  if (name == "sat") return ReductionId::kSat;
  if (name == "3col") return ReductionId::k3Col;
  if (name == "partition") return ReductionId::kPartition;
  fail(ErrorKind::kRejected, "unknown reduction '" + name + "'");
}

std::vector<Clause> all_clauses(int n) {
  std::vector<std::vector<int>> tuples;
  // Lexicographic order on variable tuples: a tuple precedes its extensions.
  for (int a = 1; a <= n; ++a) {
    tuples.push_back({a});
    for (int b = a + 1; b <= n; ++b) {
      tuples.push_back({a, b});
      for (int c = b + 1; c <= n; ++c) tuples.push_back({a, b, c});
    }
  }
  std::vector<Clause> out;
  for (const auto& t : tuples) {
    for (unsigned signs = 0; signs < (1u << t.size()); ++signs) {
      Clause c;
      for (std::size_t k = 0; k < t.size(); ++k) c.push_back((signs >> k) & 1 ? -t[k] : t[k]);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::uint64_t clause_count(int n) {
  const std::uint64_t m = static_cast<std::uint64_t>(n);
  return 2 * m + 4 * (m * (m - 1) / 2) + 8 * (m * (m - 1) * (m - 2) / 6);
}

namespace {

void check_permutation(const std::vector<std::uint32_t>& perm, std::uint64_t size) {
  require(perm.size() == size, "permutation has the wrong length");
  std::vector<std::uint8_t> seen(size, 0);
  for (auto v : perm) {
    require(v < size && !seen[v], "not a permutation");
    seen[v] = 1;
  }
}

void check_sat_arity(int n, int max_variables) {
  require(n >= 1, "formula needs at least one variable");
  if (n > max_variables) {
    fail(ErrorKind::kCapacity, "SAT reduction limited to " + std::to_string(max_variables) +
                                   " variables, got " + std::to_string(n));
  }
}

}  // namespace

ReductionOutput<Cnf> reduce_sat(const Cnf& phi, std::uint64_t seed, int max_variables) {
  check_sat_arity(phi.variable_count(), max_variables);
  core::Rng rng(seed);
  auto out = reduce_sat_permuted(phi, rng.permutation(2 * static_cast<std::uint32_t>(
                                                          clause_count(phi.variable_count()))),
                                 max_variables);
  out.seed = seed;
  return out;
}

ReductionOutput<Cnf> reduce_sat_permuted(const Cnf& phi, const std::vector<std::uint32_t>& perm,
                                         int max_variables) {
  const int n = phi.variable_count();
  check_sat_arity(n, max_variables);
  for (const auto& c : phi.clauses()) {
    require(!c.empty(), "empty clause cannot be placed in the clause list");
    require(c.size() <= 3, "clause of width " + std::to_string(c.size()) + " exceeds 3");
  }
  const auto list = all_clauses(n);
  const auto big_n = static_cast<std::uint32_t>(list.size());
  std::vector<std::uint8_t> present(big_n, 0);
  for (const auto& c : phi.clauses()) {
    auto it = std::find(list.begin(), list.end(), c);
    present[static_cast<std::size_t>(it - list.begin())] = 1;
  }

  check_permutation(perm, 2 * big_n);
  auto pi = [&](std::uint32_t i) { return static_cast<int>(perm[i - 1] + 1); };  // 1-based
  const int total_vars = n + static_cast<int>(2 * big_n);

  ReductionOutput<Cnf> out;
  out.alice_part = Cnf(total_vars, {});
  out.bob_part = Cnf(total_vars, {});
  for (std::uint32_t i = 1; i <= big_n; ++i) {
    Clause c = list[i - 1];
    c.push_back(n + pi(i));
    out.alice_part.add_clause(std::move(c));
  }
  for (std::uint32_t i = 1; i <= big_n; ++i) {
    const std::uint32_t idx = present[i - 1] ? i : big_n + i;
    out.bob_part.add_clause({-(n + pi(idx))});
    out.fingerprint.push_back(static_cast<std::uint64_t>(pi(idx)));
  }
  std::sort(out.fingerprint.begin(), out.fingerprint.end());
  return out;
}

std::uint32_t gadget_vertex(std::uint32_t n, std::uint32_t j, int slot) {
  return n + 6 * (j - 1) + static_cast<std::uint32_t>(slot) + 1;
}

ReductionOutput<Graph> reduce_3col(const Graph& g, std::uint64_t seed) {
  const auto n = static_cast<std::uint32_t>(g.vertices().size());
  require(n >= 2, "graph needs at least two vertices");
  core::Rng rng(seed);
  auto out = reduce_3col_permuted(g, rng.permutation(n * (n - 1)));
  out.seed = seed;
  return out;
}

ReductionOutput<Graph> reduce_3col_permuted(const Graph& g, const std::vector<std::uint32_t>& perm) {
  const auto n = static_cast<std::uint32_t>(g.vertices().size());
  require(n >= 2, "graph needs at least two vertices");
  for (std::uint32_t v = 1; v <= n; ++v) {
    require(g.vertices().count(v), "vertex labels must be 1..n");
  }
  for (auto [u, v] : g.edges()) require(u != v, "self-loop in input graph");

  const std::uint32_t big_n = n * (n - 1) / 2;
  check_permutation(perm, 2 * big_n);
  auto pi = [&](std::uint32_t i) { return perm[i - 1] + 1; };

  Graph a = Graph::on_vertices(n);
  for (std::uint32_t j = 1; j <= 2 * big_n; ++j) {
    for (int s = 0; s < 6; ++s) a.add_vertex(gadget_vertex(n, j, s));
  }
  Graph b = a;
  ReductionOutput<Graph> out;
  std::uint32_t e = 0;
  for (std::uint32_t v = 1; v <= n; ++v) {
    for (std::uint32_t w = v + 1; w <= n; ++w) {
      ++e;
      const std::uint32_t j = pi(e);
      const auto av = gadget_vertex(n, j, 0), bv = gadget_vertex(n, j, 1),
                 cv = gadget_vertex(n, j, 2), aw = gadget_vertex(n, j, 3),
                 bw = gadget_vertex(n, j, 4), cw = gadget_vertex(n, j, 5);
      a.add_edge(v, av);
      a.add_edge(v, bv);
      a.add_edge(w, aw);
      a.add_edge(w, bw);
      a.add_edge(av, bv);
      a.add_edge(bv, cv);
      a.add_edge(av, cv);
      a.add_edge(aw, bw);
      a.add_edge(bw, cw);
      a.add_edge(aw, cw);
      const std::uint32_t k = g.has_edge(v, w) ? pi(e) : pi(big_n + e);
      b.add_edge(gadget_vertex(n, k, 2), gadget_vertex(n, k, 5));
      out.fingerprint.push_back(k);
    }
  }
  std::sort(out.fingerprint.begin(), out.fingerprint.end());
  out.alice_part = std::move(a);
  out.bob_part = std::move(b);
  return out;
}

BigInt partition_modulus(int n) { return BigInt(n) * (BigInt(1) << n); }

ReductionOutput<IntMultiset> reduce_partition(const IntMultiset& s, std::uint64_t seed) {
  const int n = static_cast<int>(s.elements.size());
  require(n >= 1, "multiset must be nonempty");
  if (n > 57) fail(ErrorKind::kCapacity, "partition reduction limited to 57 elements");
  const BigInt bound = BigInt(1) << n;
  for (const auto& x : s.elements) {
    require(x >= 0 && x < bound, "element " + x.str() + " is not below 2^" + std::to_string(n));
  }
  const BigInt p = partition_modulus(n);
  const BigInt scale = BigInt(1) << (3 * n);  // 8^n
  core::Rng rng(seed);
  ReductionOutput<IntMultiset> out;
  out.seed = seed;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t y = rng.uniform(static_cast<std::uint64_t>(p));
    const BigInt z = ((s.elements[static_cast<std::size_t>(i)] - y) % p + p) % p;
    const BigInt eight_i = BigInt(1) << (3 * i);
    out.alice_part.elements.push_back(BigInt(y) * scale + eight_i);
    out.bob_part.elements.push_back(z * scale + 2 * eight_i);
    out.fingerprint.push_back(y);
  }
  for (int i = 0; i < n; ++i) out.bob_part.elements.push_back(BigInt(3) << (3 * i));
  // The pairs (Y_i, Z_i) land on one side together and carry x_i + c_i p
  // with wrap bits c_i in {0, 1}. The powers of two absorb the c imbalance,
  // but their signed sum is always odd; the two p/2 copies supply the other
  // parity. With an odd modulus those halves would not be integers.
  int log_n = 0;
  while ((2 << log_n) <= n) ++log_n;
  for (int j = 0; j <= log_n; ++j) out.bob_part.elements.push_back((BigInt(1) << j) * p * scale);
  for (int k = 0; k < 2; ++k) out.bob_part.elements.push_back(p / 2 * scale);
  return out;
}

}  // namespace bsmwb::splithide
