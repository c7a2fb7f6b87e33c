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
#include "bsmwb/polydeg/polydeg.hpp"

namespace bsmwb::polydeg {

std::vector<std::vector<int>> party_blocks(int n, int t) {
  std::vector<std::vector<int>> blocks;
  for (int start = 0; start < n; start += t) {
    std::vector<int> b;
    for (int i = start; i < std::min(n, start + t); ++i) b.push_back(i);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

namespace {

using Bits = std::vector<std::uint8_t>;

// Block masks of one party's part of a monomial; a zero mask means the block
// is untouched.
std::vector<std::uint32_t> block_masks(const ModularPolynomial::Monomial& mono,
                                       const std::vector<std::vector<int>>& blocks, int party, int n) {
  std::vector<std::uint32_t> masks(blocks.size(), 0);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (std::size_t k = 0; k < blocks[bi].size(); ++k) {
      const auto coord = static_cast<std::uint32_t>(blocks[bi][k] + party * n);
      for (auto v : mono) {
        if (v == coord) masks[bi] |= 1u << k;
      }
    }
  }
  return masks;
}

bool hits_all(const std::vector<std::uint32_t>& masks) {
  for (auto m : masks) {
    if (m == 0) return false;
  }
  return true;
}

// C = L R over F2 with R the nonzero rows of the reduced row echelon form.
struct RankFactors {
  std::vector<Bits> l;  // rows x rank
  std::vector<Bits> r;  // rank x cols
};

RankFactors factor_f2(const std::vector<Bits>& c, std::size_t cols) {
  std::vector<Bits> m = c;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && !m[sel][col]) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != row && m[i][col]) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[row][j];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  RankFactors f;
  f.r.assign(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(pivots.size()));
  for (const auto& ci : c) {
    Bits li;
    for (auto p : pivots) li.push_back(ci[p]);
    f.l.push_back(std::move(li));
  }
  return f;
}

}  // namespace

// Block rewriting alone reaches degree 2B for B blocks per party, while
// ceil(2n/t) = 2B - 1 whenever the last block has r <= t/2 coordinates.
// Only monomials touching every block on both sides overshoot. Their
// coefficient matrix C (rows: Alice parts, columns: Bob parts) is factored
// as a sum of rank-one pieces u_k(x) v_k(y), and each piece becomes one extra
// message symbol: Alice sends u_k and Carol multiplies it by v_k over Bob's
// B block variables (degree B + 1), or the other way round. The spare room
// is B(2^t - 1) minus the block symbols on each side; if the rank does not
// fit, the overshooting monomials stay as they are.
BsmProtocol degree_reduce_protocol(const TruthTable& f, int t) {
  require(f.arity() % 2 == 0, "target must have an even number of input bits");
  const int n = f.arity() / 2;
  require(t >= 1 && t <= n, "block size t must lie in [1, n]");
  const auto blocks = party_blocks(n, t);
  const auto nb = static_cast<std::uint64_t>(blocks.size());

  // Symbol offset of each block inside one party's message.
  std::vector<std::uint32_t> offset;
  std::uint32_t base = 0;
  for (const auto& b : blocks) {
    offset.push_back(base);
    base += (1u << b.size()) - 1;
  }
  const std::uint32_t budget = static_cast<std::uint32_t>(nb) * ((1u << t) - 1);
  const std::uint64_t bound = (2 * static_cast<std::uint64_t>(n) + t - 1) / t;

  const ModularPolynomial p = mobius_f2(f);

  // Split off the monomials that block rewriting would push past the bound.
  std::vector<ModularPolynomial::Monomial> plain;
  std::vector<std::vector<std::uint32_t>> rows_s, cols_t;  // distinct block-mask tuples
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  const bool fold_needed = 2 * nb > bound && nb >= 2;
  for (const auto& [mono, coeff] : p.monomials()) {
    const auto ma = block_masks(mono, blocks, 0, n);
    const auto mb = block_masks(mono, blocks, 1, n);
    if (!fold_needed || !hits_all(ma) || !hits_all(mb)) {
      plain.push_back(mono);
      continue;
    }
    auto index_of = [](std::vector<std::vector<std::uint32_t>>& v, const std::vector<std::uint32_t>& key) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == key) return i;
      }
      v.push_back(key);
      return v.size() - 1;
    };
    cells.emplace_back(index_of(rows_s, ma), index_of(cols_t, mb));
  }

  RankFactors fac;
  if (!cells.empty()) {
    std::vector<Bits> c(rows_s.size(), Bits(cols_t.size(), 0));
    for (auto [i, j] : cells) c[i][j] ^= 1;
    fac = factor_f2(c, cols_t.size());
  }
  const std::uint32_t spare = budget - base;
  const auto rank = static_cast<std::uint32_t>(fac.r.size());
  if (rank > 2 * spare) {
    // Does not fit: keep the plain rewrite for these monomials too.
    for (const auto& [mono, coeff] : p.monomials()) {
      const auto ma = block_masks(mono, blocks, 0, n);
      const auto mb = block_masks(mono, blocks, 1, n);
      if (fold_needed && hits_all(ma) && hits_all(mb)) plain.push_back(mono);
    }
    fac = {};
  }
  const std::uint32_t extra_a = std::min<std::uint32_t>(static_cast<std::uint32_t>(fac.r.size()), spare);
  const std::uint32_t extra_b = static_cast<std::uint32_t>(fac.r.size()) - extra_a;
  const std::uint32_t len_a = base + extra_a;
  const std::uint32_t len_b = base + extra_b;

  auto block_symbols = [&](std::uint64_t x, Bits& out) {
    for (const auto& b : blocks) {
      for (std::uint32_t mask = 1; mask < (1u << b.size()); ++mask) {
        std::uint8_t prod = 1;
        for (std::size_t k = 0; k < b.size(); ++k) {
          if ((mask >> k) & 1) prod &= static_cast<std::uint8_t>((x >> b[k]) & 1);
        }
        out.push_back(prod);
      }
    }
  };
  // Value of the product of block variables named by `masks` at input x.
  auto product = [&](std::uint64_t x, const std::vector<std::uint32_t>& masks) {
    std::uint8_t v = 1;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      for (std::size_t k = 0; k < blocks[bi].size(); ++k) {
        if ((masks[bi] >> k) & 1) v &= static_cast<std::uint8_t>((x >> blocks[bi][k]) & 1);
      }
    }
    return v;
  };
  auto alice = [&](std::uint64_t x) {
    Bits out;
    out.reserve(len_a);
    block_symbols(x, out);
    for (std::uint32_t k = 0; k < extra_a; ++k) {
      std::uint8_t u = 0;
      for (std::size_t i = 0; i < rows_s.size(); ++i) {
        if (fac.l[i][k]) u ^= product(x, rows_s[i]);
      }
      out.push_back(u);
    }
    return out;
  };
  auto bob = [&](std::uint64_t y) {
    Bits out;
    out.reserve(len_b);
    block_symbols(y, out);
    for (std::uint32_t k = extra_a; k < extra_a + extra_b; ++k) {
      std::uint8_t v = 0;
      for (std::size_t j = 0; j < cols_t.size(); ++j) {
        if (fac.r[k][j]) v ^= product(y, cols_t[j]);
      }
      out.push_back(v);
    }
    return out;
  };

  // Carol variables: Alice's symbols first, then Bob's.
  auto block_vars = [&](const std::vector<std::uint32_t>& masks, std::uint32_t shift,
                        ModularPolynomial::Monomial& out) {
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      if (masks[bi]) out.push_back(shift + offset[bi] + masks[bi] - 1);
    }
  };
  ModularPolynomial carol(2, len_a + len_b);
  for (const auto& mono : plain) {
    ModularPolynomial::Monomial rewritten;
    block_vars(block_masks(mono, blocks, 0, n), 0, rewritten);
    block_vars(block_masks(mono, blocks, 1, n), len_a, rewritten);
    carol.add_term(std::move(rewritten), 1);
  }
  for (std::uint32_t k = 0; k < extra_a; ++k) {
    for (std::size_t j = 0; j < cols_t.size(); ++j) {
      if (!fac.r[k][j]) continue;
      ModularPolynomial::Monomial m{base + k};
      block_vars(cols_t[j], len_a, m);
      carol.add_term(std::move(m), 1);
    }
  }
  for (std::uint32_t k = extra_a; k < extra_a + extra_b; ++k) {
    for (std::size_t i = 0; i < rows_s.size(); ++i) {
      if (!fac.l[i][k]) continue;
      ModularPolynomial::Monomial m{len_a + base + (k - extra_a)};
      block_vars(rows_s[i], 0, m);
      carol.add_term(std::move(m), 1);
    }
  }
  return BsmProtocol::from_maps(n, 2, alice, bob,
                                core::CarolEvaluator::polynomial(std::move(carol), {0, 1}));
}

int block_size_for_budget(int n, std::uint64_t m) {
  require(n >= 1, "n must be positive");
  const double ratio = static_cast<double>(m) / (4.0 * n);
  require(ratio > 1.0, "message budget must exceed 4n");
  return static_cast<int>(std::ceil(std::log2(ratio) - 1e-12));
}

}  // namespace bsmwb::polydeg
