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

#include <cmath>

#include "bsmwb/core/error.hpp"
#include "bsmwb/core/parallel.hpp"
#include "bsmwb/core/verify.hpp"
#include "bsmwb/polydeg/polydeg.hpp"

namespace bsmwb::polydeg {

bool Idg1Form::evaluate(std::uint32_t z, std::uint32_t w) const {
  unsigned acc = r;
  for (int i = 0; i < m_a; ++i) {
    if (!((z >> i) & 1)) continue;
    acc ^= d[static_cast<std::size_t>(i)];
    for (int j = 0; j < m_b; ++j) {
      if ((w >> j) & 1) acc ^= c[static_cast<std::size_t>(i * m_b + j)];
    }
  }
  for (int j = 0; j < m_b; ++j) {
    if ((w >> j) & 1) acc ^= e[static_cast<std::size_t>(j)];
  }
  return acc & 1;
}

ModularPolynomial Idg1Form::to_polynomial() const {
  ModularPolynomial p(2, static_cast<std::uint32_t>(m_a + m_b));
  for (int i = 0; i < m_a; ++i) {
    for (int j = 0; j < m_b; ++j) {
      if (c[static_cast<std::size_t>(i * m_b + j)]) {
        p.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(m_a + j)}, 1);
      }
    }
    if (d[static_cast<std::size_t>(i)]) p.add_term({static_cast<std::uint32_t>(i)}, 1);
  }
  for (int j = 0; j < m_b; ++j) {
    if (e[static_cast<std::size_t>(j)]) p.add_term({static_cast<std::uint32_t>(m_a + j)}, 1);
  }
  if (r) p.add_term({}, 1);
  return p;
}

namespace {

// Unknowns: c_ij at i*m + j, d_i at m^2 + i, e_j at m^2 + m + j, r last.
struct Layout {
  int m;
  int unknowns() const { return m * m + 2 * m + 1; }
  std::uint64_t features(std::uint32_t z, std::uint32_t w) const {
    std::uint64_t f = 0;
    for (int i = 0; i < m; ++i) {
      if (!((z >> i) & 1)) continue;
      f |= std::uint64_t{1} << (m * m + i);
      for (int j = 0; j < m; ++j) {
        if ((w >> j) & 1) f |= std::uint64_t{1} << (i * m + j);
      }
    }
    for (int j = 0; j < m; ++j) {
      if ((w >> j) & 1) f |= std::uint64_t{1} << (m * m + m + j);
    }
    return f | (std::uint64_t{1} << (m * m + 2 * m));
  }
};

// Solves rows (mask, rhs) over F2; returns the solution with free unknowns 0.
std::optional<std::uint64_t> solve(std::vector<std::pair<std::uint64_t, std::uint8_t>> rows,
                                   int unknowns) {
  std::vector<int> pivot_row_of(static_cast<std::size_t>(unknowns), -1);
  std::size_t rank = 0;
  for (int col = 0; col < unknowns && rank < rows.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t r = rank;
    while (r < rows.size() && !(rows[r].first & bit)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o != rank && (rows[o].first & bit)) {
        rows[o].first ^= rows[rank].first;
        rows[o].second ^= rows[rank].second;
      }
    }
    pivot_row_of[static_cast<std::size_t>(col)] = static_cast<int>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r].second) return std::nullopt;  // 0 = 1
  }
  std::uint64_t sol = 0;
  for (int col = 0; col < unknowns; ++col) {
    int r = pivot_row_of[static_cast<std::size_t>(col)];
    if (r >= 0 && rows[static_cast<std::size_t>(r)].second) sol |= std::uint64_t{1} << col;
  }
  return sol;
}

struct Hit {
  bool found = false;
  std::uint64_t alice = 0;
  std::uint64_t bob = 0;
  std::uint64_t solution = 0;
};

}  // namespace

Idg1Result search_idg1_protocol(const TruthTable& f, int m, const Idg1Options& options) {
  require(f.arity() % 2 == 0, "target must have an even number of input bits");
  const int n = f.arity() / 2;
  require(m >= 1 && m <= 4, "message length must lie in [1, 4]");
  require(n >= 1 && n <= 3, "search limited to n <= 3");
  const int map_bits = m * (1 << n);
  if (2 * map_bits > 62 ||
      (std::uint64_t{1} << (2 * map_bits)) > options.max_map_pairs) {
    fail(ErrorKind::kCapacity, "idg1 search needs 2^" + std::to_string(2 * map_bits) +
                                   " map pairs, budget is " +
                                   std::to_string(options.max_map_pairs));
  }
  const std::uint64_t maps = std::uint64_t{1} << map_bits;
  const std::uint32_t msg_mask = (1u << m) - 1;
  const std::uint64_t inputs = std::uint64_t{1} << n;
  const Layout layout{m};
  std::vector<std::uint64_t> feat(std::size_t{1} << (2 * m));
  for (std::uint32_t z = 0; z <= msg_mask; ++z) {
    for (std::uint32_t w = 0; w <= msg_mask; ++w) feat[z | (w << m)] = layout.features(z, w);
  }
  auto ordered = [&](std::uint64_t i) { return options.reverse_order ? maps - 1 - i : i; };
  auto message = [&](std::uint64_t map, std::uint64_t x) {
    return static_cast<std::uint32_t>((map >> (m * x)) & msg_mask);
  };

  auto chunks = core::parallel_chunks<Hit>(maps, options.jobs, [&](std::uint64_t b, std::uint64_t e) {
    std::vector<std::pair<std::uint64_t, std::uint8_t>> rows(inputs * inputs);
    for (std::uint64_t ai = b; ai < e; ++ai) {
      const std::uint64_t a = ordered(ai);
      for (std::uint64_t bi = 0; bi < maps; ++bi) {
        const std::uint64_t bm = ordered(bi);
        for (std::uint64_t y = 0; y < inputs; ++y) {
          for (std::uint64_t x = 0; x < inputs; ++x) {
            rows[x + y * inputs] = {feat[message(a, x) | (message(bm, y) << m)],
                                    static_cast<std::uint8_t>(f.at(x, y))};
          }
        }
        if (auto sol = solve(rows, layout.unknowns())) return Hit{true, a, bm, *sol};
      }
    }
    return Hit{};
  });

  Idg1Result result;
  for (const auto& hit : chunks) {
    if (!hit.found) continue;
    Idg1Form form{m, m, std::vector<std::uint8_t>(static_cast<std::size_t>(m * m)),
                  std::vector<std::uint8_t>(static_cast<std::size_t>(m)),
                  std::vector<std::uint8_t>(static_cast<std::size_t>(m)), 0};
    for (int i = 0; i < m * m; ++i) form.c[static_cast<std::size_t>(i)] = (hit.solution >> i) & 1;
    for (int i = 0; i < m; ++i) {
      form.d[static_cast<std::size_t>(i)] = (hit.solution >> (m * m + i)) & 1;
      form.e[static_cast<std::size_t>(i)] = (hit.solution >> (m * m + m + i)) & 1;
    }
    form.r = (hit.solution >> (m * m + 2 * m)) & 1;
    for (std::uint64_t x = 0; x < inputs; ++x) {
      result.alice_map.push_back(message(hit.alice, x));
      result.bob_map.push_back(message(hit.bob, x));
    }
    auto bits = [m](std::uint32_t v) {
      std::vector<std::uint8_t> out(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = (v >> i) & 1;
      return out;
    };
    result.protocol = BsmProtocol::from_maps(
        n, 2, [&](std::uint64_t x) { return bits(result.alice_map[x]); },
        [&](std::uint64_t y) { return bits(result.bob_map[y]); },
        core::CarolEvaluator::polynomial(form.to_polynomial(), {0, 1}));
    result.form = std::move(form);
    return result;
  }
  result.certificate = {maps * maps, std::uint64_t{1} << layout.unknowns(), options.reverse_order};
  return result;
}

DegreeBoundReport check_degree_bounds(const BsmProtocol& protocol) {
  const auto* poly = std::get_if<core::PolynomialCarol>(&protocol.carol().payload());
  require(poly != nullptr && poly->poly.modulus() == 2, "degree bounds need an F2 polynomial Carol");
  DegreeBoundReport r;
  r.n = protocol.input_arity();
  r.m = std::max(protocol.alice_length(), protocol.bob_length());
  r.degree = poly->poly.degree();
  r.bound = static_cast<double>(r.n) / std::log2(static_cast<double>(r.m) + 1.0);
  r.computes_eq =
      core::verify_exhaustive(protocol, core::equality_table(r.n), {core::Limits::unbounded(), 1}).ok();
  r.holds = static_cast<double>(r.degree) >= r.bound - 1e-12;
  r.falsification = r.computes_eq && !r.holds;
  return r;
}

}  // namespace bsmwb::polydeg
