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
#include <map>

#include "bsmwb/bridges/bridges.hpp"
#include "bsmwb/core/error.hpp"
#include "bsmwb/core/verify.hpp"
#include "bsmwb/splithide/deciders.hpp"

namespace bsmwb::bridges {

std::vector<std::uint32_t> permutation_unrank(std::uint32_t size, std::uint64_t rank) {
  std::vector<std::uint64_t> fact(size + 1, 1);
  for (std::uint32_t i = 1; i <= size; ++i) {
    require(fact[i - 1] <= UINT64_MAX / i, "permutation size too large to rank");
    fact[i] = fact[i - 1] * i;
  }
  require(rank < fact[size], "permutation rank out of range");
  std::vector<std::uint32_t> pool(size);
  for (std::uint32_t i = 0; i < size; ++i) pool[i] = i;
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = size; k > 0; --k) {
    const std::uint64_t digit = rank / fact[k - 1];
    rank %= fact[k - 1];
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return out;
}

IhScheme xor_bsm_to_ih(const BsmProtocol& protocol, const TruthTable& g) {
  const int n = g.arity();
  require(protocol.input_arity() == n, "protocol arity differs from the function arity");
  const auto report = core::verify_exhaustive(protocol, core::combined(g, core::Combiner::kXor));
  require(report.ok(), "protocol does not compute g(x xor y)");
  IhScheme s;
  s.n = n;
  s.randomness_count = std::uint64_t{1} << n;
  s.query_bits_a = s.query_bits_b = n;
  for (std::uint64_t x = 0; x < g.size(); ++x) {
    for (std::uint64_t r = 0; r < s.randomness_count; ++r) {
      s.query_a.push_back(x ^ r);
      s.query_b.push_back(r);
    }
  }
  s.modulus = protocol.modulus();
  s.answer_length_a = protocol.alice_length();
  s.answer_length_b = protocol.bob_length();
  s.oracle_a = protocol.alice_table();
  s.oracle_b = protocol.bob_table();
  const auto& c = protocol.carol();
  s.combine = c.with_offsets(c.alice_offset() + static_cast<std::uint32_t>(n),
                             c.bob_offset() + static_cast<std::uint32_t>(n));
  s.target = g;
  return s;
}

IhScheme corrupt_answer(const IhScheme& scheme, bool oracle_b, std::uint64_t query) {
  IhScheme s = scheme;
  auto& table = oracle_b ? s.oracle_b : s.oracle_a;
  const std::uint32_t len = oracle_b ? s.answer_length_b : s.answer_length_a;
  const int bits = oracle_b ? s.query_bits_b : s.query_bits_a;
  require(len > 0, "oracle answers are empty");
  require(query < (std::uint64_t{1} << bits), "query out of range");
  auto& sym = table[query * len];
  sym = static_cast<std::uint8_t>((sym + 1) % s.modulus);
  return s;
}

// -- Split-hide route -----------------------------------------------------------

std::uint64_t SplitQueryIndex::index_a(const std::string& s) const {
  auto it = std::lower_bound(parts_a.begin(), parts_a.end(), s);
  require(it != parts_a.end() && *it == s, "unknown Alice part");
  return static_cast<std::uint64_t>(it - parts_a.begin());
}

std::uint64_t SplitQueryIndex::index_b(const std::string& s) const {
  auto it = std::lower_bound(parts_b.begin(), parts_b.end(), s);
  require(it != parts_b.end() && *it == s, "unknown Bob part");
  return static_cast<std::uint64_t>(it - parts_b.begin());
}

SplitQueryIndex index_split_queries(const SplitFamily& family) {
  SplitQueryIndex index;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << family.n); ++x) {
    for (std::uint64_t r = 0; r < family.randomness_count; ++r) {
      auto [a, b] = family.split(x, r);
      index.parts_a.push_back(std::move(a));
      index.parts_b.push_back(std::move(b));
    }
  }
  for (auto* v : {&index.parts_a, &index.parts_b}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  const std::size_t most = std::max(index.parts_a.size(), index.parts_b.size());
  index.query_bits = 1;
  while ((std::size_t{1} << index.query_bits) < most) ++index.query_bits;
  require(index.query_bits <= 10, "too many distinct split parts to tabulate");
  return index;
}

BsmProtocol split_language_lookup(const SplitFamily& family, const SplitQueryIndex& index) {
  const int m = index.query_bits;
  const std::uint64_t side = std::uint64_t{1} << m;
  std::vector<std::uint8_t> v(side * side, 0);
  for (std::uint64_t qa = 0; qa < index.parts_a.size(); ++qa) {
    for (std::uint64_t qb = 0; qb < index.parts_b.size(); ++qb) {
      v[qa | (qb << m)] = family.language(index.parts_a[qa], index.parts_b[qb]);
    }
  }
  return core::lookup_protocol(TruthTable(2 * m, std::move(v)));
}

namespace {

std::uint64_t factorial_capped(std::uint64_t k) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= k; ++i) {
    f *= i;
    if (f > (std::uint64_t{1} << 20)) {
      fail(ErrorKind::kCapacity, "randomness space exceeds 2^20 permutations");
    }
  }
  return f;
}

}  // namespace

SplitFamily split_family(splithide::ReductionId id, int n) {
  using splithide::ReductionId;
  SplitFamily f;
  f.name = splithide::reduction_name(id);
  if (id == ReductionId::kSat) {
    require(n >= 1, "SAT family needs n >= 1");
    const auto clauses = splithide::all_clauses(n);
    const auto big_n = static_cast<std::uint32_t>(clauses.size());
    require(big_n <= 16, "clause list too long to enumerate inputs");
    f.n = static_cast<int>(big_n);
    f.randomness_count = factorial_capped(2 * big_n);
    auto phi = [clauses, n](std::uint64_t x) {
      splithide::Cnf c(n, {});
      for (std::size_t i = 0; i < clauses.size(); ++i) {
        if ((x >> i) & 1) c.add_clause(clauses[i]);
      }
      return c;
    };
    f.split = [phi, big_n](std::uint64_t x, std::uint64_t r) {
      const auto out = splithide::reduce_sat_permuted(phi(x), permutation_unrank(2 * big_n, r));
      return std::pair{splithide::to_dimacs(out.alice_part), splithide::to_dimacs(out.bob_part)};
    };
    f.target = [phi](std::uint64_t x) { return splithide::decide_sat(phi(x)); };
    f.language = [](const std::string& a, const std::string& b) {
      return splithide::decide_sat(
          splithide::Cnf::conjoin(splithide::from_dimacs(a), splithide::from_dimacs(b)));
    };
    return f;
  }
  if (id == ReductionId::k3Col) {
    require(n >= 2, "3COL family needs n >= 2 vertices");
    const auto big_n = static_cast<std::uint32_t>(n * (n - 1) / 2);
    f.n = static_cast<int>(big_n);
    f.randomness_count = factorial_capped(2 * big_n);
    auto graph = [n](std::uint64_t x) {
      auto g = splithide::Graph::on_vertices(static_cast<std::uint32_t>(n));
      std::uint64_t e = 0;
      for (int v = 1; v <= n; ++v) {
        for (int w = v + 1; w <= n; ++w, ++e) {
          if ((x >> e) & 1) g.add_edge(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(w));
        }
      }
      return g;
    };
    f.split = [graph, big_n](std::uint64_t x, std::uint64_t r) {
      const auto out = splithide::reduce_3col_permuted(graph(x), permutation_unrank(2 * big_n, r));
      return std::pair{splithide::to_edge_list(out.alice_part),
                       splithide::to_edge_list(out.bob_part)};
    };
    f.target = [graph](std::uint64_t x) { return splithide::decide_3col(graph(x)); };
    f.language = [](const std::string& a, const std::string& b) {
      return splithide::decide_3col(
          splithide::Graph::merge(splithide::from_edge_list(a), splithide::from_edge_list(b)));
    };
    return f;
  }
  fail(ErrorKind::kRejected, "the partition reduction's randomness cannot be enumerated exactly");
}

SplitFamily identity_split_family(int n) {
  require(n >= 1 && n <= 8, "identity family supports 1 <= n <= 8");
  SplitFamily f;
  f.name = "identity";
  f.n = n;
  f.randomness_count = 1;
  auto bits = [n](std::uint64_t x) {
    std::string s;
    for (int i = 0; i < n; ++i) s += ((x >> i) & 1) ? '1' : '0';
    return s;
  };
  f.split = [bits](std::uint64_t x, std::uint64_t) { return std::pair{bits(x), std::string()}; };
  f.target = [](std::uint64_t x) { return (std::popcount(x) & 1) != 0; };
  f.language = [](const std::string& a, const std::string&) {
    return (std::count(a.begin(), a.end(), '1') & 1) != 0;
  };
  return f;
}

IhScheme splithide_bsm_to_ih(const SplitFamily& family, const SplitQueryIndex& index,
                             const BsmProtocol& protocol) {
  const int m = index.query_bits;
  require(protocol.input_arity() == m, "protocol arity differs from the query width");
  IhScheme s;
  s.n = family.n;
  s.randomness_count = family.randomness_count;
  s.query_bits_a = s.query_bits_b = m;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << family.n); ++x) {
    for (std::uint64_t r = 0; r < family.randomness_count; ++r) {
      const auto [a, b] = family.split(x, r);
      s.query_a.push_back(index.index_a(a));
      s.query_b.push_back(index.index_b(b));
    }
  }
  s.modulus = protocol.modulus();
  s.answer_length_a = protocol.alice_length();
  s.answer_length_b = protocol.bob_length();
  s.oracle_a = protocol.alice_table();
  s.oracle_b = protocol.bob_table();
  const auto& c = protocol.carol();
  s.combine = c.with_offsets(c.alice_offset() + static_cast<std::uint32_t>(m),
                             c.bob_offset() + static_cast<std::uint32_t>(m));
  s.target = core::tabulate([&](std::uint64_t x) { return family.target(x); }, family.n);
  const auto audit = audit_ih(s);
  require(audit.private_(), "privacy check failed: a query marginal depends on Henry's input");
  require(audit.correct(), "split-hide scheme answers wrongly on " +
                               std::to_string(audit.wrong.size()) + " (input, randomness) pairs");
  return s;
}

// -- IH to BSM -----------------------------------------------------------------

std::optional<CollisionWitness> find_query_collision(const IhScheme& scheme) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, InputRandomness> seen;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << scheme.n); ++x) {
    for (std::uint64_t r = 0; r < scheme.randomness_count; ++r) {
      const std::uint64_t k = x * scheme.randomness_count + r;
      const std::pair key{scheme.query_a[k], scheme.query_b[k]};
      auto [it, inserted] = seen.emplace(key, InputRandomness{x, r});
      if (!inserted && scheme.target[it->second.x] != scheme.target[x]) {
        return CollisionWitness{it->second, {x, r}, key.first, key.second};
      }
    }
  }
  return std::nullopt;
}

IhToBsmResult ih_to_bsm(const IhScheme& scheme) {
  scheme.check_shape();
  const int m = scheme.query_bits_a;
  require(m == scheme.query_bits_b, "query widths differ between the oracles");
  require(m >= 1 && m <= 12, "query width must lie in [1, 12]");
  const auto audit = audit_ih(scheme);
  require(audit.uniform_a && audit.uniform_b, "queries are not uniformly distributed");
  if (auto w = find_query_collision(scheme)) {
    fail(ErrorKind::kRejected,
         "query pair (" + std::to_string(w->query_a) + ", " + std::to_string(w->query_b) +
             ") arises from input " + std::to_string(w->first.x) + " (r=" +
             std::to_string(w->first.r) + ") and input " + std::to_string(w->second.x) + " (r=" +
             std::to_string(w->second.r) + ") with different function values");
  }
  const std::uint64_t side = std::uint64_t{1} << m;
  auto build = [&](bool b_side) {
    std::vector<std::uint8_t> table;
    for (std::uint64_t q = 0; q < side; ++q) {
      auto msg = b_side ? scheme.message_b(q) : scheme.message_a(q);
      table.insert(table.end(), msg.begin(), msg.end());
    }
    return table;
  };
  const auto la = static_cast<std::uint32_t>(m) + scheme.answer_length_a;
  const auto lb = static_cast<std::uint32_t>(m) + scheme.answer_length_b;
  BsmProtocol p(m, scheme.modulus, la, build(false), lb, build(true), scheme.combine);

  std::vector<std::uint8_t> value(side * side), reachable(side * side, 0);
  for (std::uint64_t qa = 0; qa < side; ++qa) {
    for (std::uint64_t qb = 0; qb < side; ++qb) value[qa | (qb << m)] = p.run(qa, qb);
  }
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << scheme.n); ++x) {
    for (std::uint64_t r = 0; r < scheme.randomness_count; ++r) {
      const std::uint64_t k = x * scheme.randomness_count + r;
      const std::uint64_t idx = scheme.query_a[k] | (scheme.query_b[k] << m);
      value[idx] = scheme.target[x];
      reachable[idx] = 1;
    }
  }
  return {std::move(p), TruthTable(2 * m, std::move(value)), std::move(reachable)};
}

}  // namespace bsmwb::bridges
