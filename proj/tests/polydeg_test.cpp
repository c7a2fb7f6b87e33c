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

#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "bsmwb/core/error.hpp"
#include "bsmwb/core/verify.hpp"
#include "bsmwb/polydeg/polydeg.hpp"
#include "test_util.hpp"

namespace bsmwb::polydeg {
namespace {

using testing::random_table;

std::vector<std::uint8_t> bits_of(std::uint64_t z, int n) {
  std::vector<std::uint8_t> v(n);
  for (int i = 0; i < n; ++i) v[i] = (z >> i) & 1;
  return v;
}

TEST(Mobius, PolynomialAgreesWithTableEverywhere) {
  core::Rng rng(1);
  for (int n = 0; n <= 8; ++n) {
    const auto f = random_table(rng, n);
    const auto p = mobius_f2(f);
    EXPECT_TRUE(p.multilinear());
    for (std::uint64_t z = 0; z < f.size(); ++z) EXPECT_EQ(p.evaluate(bits_of(z, n)), f[z] ? 1u : 0u);
  }
}

TEST(Mobius, KnownExpansions) {
  // x0 or x1 = x0 + x1 + x0 x1
  EXPECT_EQ(mobius_f2(core::or_table(2)).monomials().size(), 3u);
  EXPECT_EQ(mobius_f2(core::parity_table(5)).degree(), 1u);
  EXPECT_EQ(mobius_f2(core::and_table(5)).monomials().size(), 1u);
}

TEST(DegreeReduce, BlocksAreConsecutive) {
  EXPECT_EQ(party_blocks(4, 2), (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(party_blocks(4, 3), (std::vector<std::vector<int>>{{0, 1, 2}, {3}}));
}

TEST(DegreeReduce, ExactWithinBoundsWhenTDividesN) {
  core::Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_table(rng, 8);
    for (int t : {1, 2, 4}) {
      const auto p = degree_reduce_protocol(f, t);
      EXPECT_TRUE(core::verify_exhaustive(p, f).ok());
      const auto m = core::measure(p);
      EXPECT_LE(*m.cost.degree, static_cast<std::uint64_t>((8 + t - 1) / t));
      EXPECT_LE(p.alice_length(), static_cast<std::uint32_t>(((4 + t - 1) / t) * ((1 << t) - 1)));
    }
  }
}

TEST(DegreeReduce, RaggedBlocksStillExact) {
  core::Rng rng(3);
  const auto f = random_table(rng, 10);
  const auto p = degree_reduce_protocol(f, 3);
  EXPECT_TRUE(core::verify_exhaustive(p, f).ok());
  EXPECT_EQ(p.alice_length(), 7u + 3u);
}

// n=4, t=3 and n=3, t=2 leave a short last block; the cross monomials are
// folded into spare symbols to stay at ceil(2n/t).
TEST(DegreeReduce, ShortLastBlockIsFolded) {
  core::Rng rng(4);
  for (auto [n, t] : {std::pair{4, 3}, std::pair{3, 2}}) {
    const std::uint64_t degree_bound = (2 * n + t - 1) / t;
    const auto length_bound = static_cast<std::uint32_t>(((n + t - 1) / t) * ((1 << t) - 1));
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_table(rng, 2 * n);
      const auto p = degree_reduce_protocol(f, t);
      EXPECT_TRUE(core::verify_exhaustive(p, f).ok());
      EXPECT_LE(*core::measure(p).cost.degree, degree_bound);
      EXPECT_LE(p.alice_length(), length_bound);
      EXPECT_LE(p.bob_length(), length_bound);
    }
  }
  // AND on 8 bits: one cross monomial, rank one, one extra symbol for Alice.
  const auto p = degree_reduce_protocol(core::and_table(8), 3);
  EXPECT_EQ(p.alice_length(), 9u);
  EXPECT_EQ(p.bob_length(), 8u);
  EXPECT_EQ(*core::measure(p).cost.degree, 3u);
}

TEST(DegreeReduce, BudgetHelper) {
  EXPECT_EQ(block_size_for_budget(4, 64), 2);   // log2(64/16) = 2
  EXPECT_EQ(block_size_for_budget(4, 100), 3);  // ceil(log2 6.25)
  EXPECT_THROW(block_size_for_budget(4, 8), Error);
}

TEST(Idg1, EqualityOnTwoBitsNeedsThreeBits) {
  const auto eq = core::equality_table(2);
  const auto none = search_idg1_protocol(eq, 2);
  EXPECT_FALSE(none.protocol.has_value());
  EXPECT_EQ(none.certificate.map_pairs_examined, 65536u);
  const auto found = search_idg1_protocol(eq, 3);
  ASSERT_TRUE(found.protocol.has_value());
  EXPECT_TRUE(core::verify_exhaustive(*found.protocol, eq).ok());
  EXPECT_LE(core::measure(*found.protocol).cost.degree.value_or(99), 2u);
}

TEST(Idg1, ReverseOrderAgreesOnExhaustion) {
  Idg1Options opts;
  opts.reverse_order = true;
  EXPECT_FALSE(search_idg1_protocol(core::equality_table(2), 2, opts).protocol.has_value());
}

TEST(Idg1, BruteForceOverFormsAgreesAtOneBit) {
  // Oracle: try every map pair and every form directly (m = 1, n = 1).
  core::Rng rng(4);
  for (int trial = 0; trial < 16; ++trial) {
    const auto f = random_table(rng, 2);
    bool brute = false;
    for (int am = 0; am < 4 && !brute; ++am) {
      for (int bm = 0; bm < 4 && !brute; ++bm) {
        for (int form = 0; form < 16 && !brute; ++form) {
          bool ok = true;
          for (int x = 0; x < 2 && ok; ++x) {
            for (int y = 0; y < 2 && ok; ++y) {
              const int z = (am >> x) & 1, w = (bm >> y) & 1;
              const int v = ((form & 1) & z & w) ^ (((form >> 1) & 1) & z) ^ (((form >> 2) & 1) & w) ^
                            ((form >> 3) & 1);
              ok = v == static_cast<int>(f.at(x, y));
            }
          }
          brute = ok;
        }
      }
    }
    EXPECT_EQ(search_idg1_protocol(f, 1).protocol.has_value(), brute);
  }
}

TEST(Idg1, CapacityBudget) {
  Idg1Options opts;
  opts.max_map_pairs = 10;
  try {
    search_idg1_protocol(core::equality_table(2), 2, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapacity);
  }
}

TEST(DegreeBounds, LookupAndMvProtocolsRespectTheBound) {
  const auto r = check_degree_bounds(search_idg1_protocol(core::equality_table(2), 3).protocol.value());
  EXPECT_TRUE(r.computes_eq);
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(r.bound, 2.0 / std::log2(4.0), 1e-12);
}

TEST(F4, FieldAxioms) {
  for (std::uint8_t a = 0; a < 4; ++a) {
    EXPECT_EQ(f4_mul(a, 1), a);
    EXPECT_EQ(f4_mul(a, 0), 0);
    for (std::uint8_t b = 0; b < 4; ++b) {
      EXPECT_EQ(f4_mul(a, b), f4_mul(b, a));
      for (std::uint8_t c = 0; c < 4; ++c) {
        EXPECT_EQ(f4_mul(a, b ^ c), f4_mul(a, b) ^ f4_mul(a, c));
      }
    }
    if (a) {
      int inverses = 0;
      for (std::uint8_t b = 1; b < 4; ++b) inverses += f4_mul(a, b) == 1;
      EXPECT_EQ(inverses, 1);
    }
  }
}

TEST(Mv, PredicateIsTheZeroIndicator) {
  for (std::uint32_t c = 0; c < 6; ++c) EXPECT_EQ(mv_predicate(c), c == 0 ? 1 : 0) << c;
}

TEST(Mv, SearchFindsValidFamilies) {
  for (auto [size, k] : {std::pair<std::size_t, int>{2, 1}, {4, 2}}) {
    const auto res = find_mv_family(size, k);
    ASSERT_TRUE(res.family.has_value());
    const auto& f = *res.family;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        const auto ip = MvFamily::inner(f.u()[i], f.v()[j]);
        if (i == j) {
          EXPECT_EQ(ip, 0u);
        } else {
          EXPECT_TRUE(MvFamily::in_s(ip));
        }
      }
    }
  }
}

TEST(Mv, NoFamilyOfSizeThreeInDimensionOne) {
  EXPECT_FALSE(find_mv_family(3, 1).family.has_value());
}

TEST(Mv, ConstructorRejectsInvalidFamily) {
  EXPECT_THROW(MvFamily(1, {{1}, {2}}, {{1}, {1}}), Error);
}

TEST(Mv, TextRoundTrip) {
  const auto f = find_mv_family(4, 2).family.value();
  const auto back = MvFamily::from_text(f.to_text());
  EXPECT_EQ(back.u(), f.u());
  EXPECT_EQ(back.v(), f.v());
  EXPECT_THROW(MvFamily::from_text("2 2\n07\n"), Error);
}

TEST(Mv, EqualityProtocolIsExactWithDegreeTwo) {
  const auto f = find_mv_family(4, 2).family.value();
  const auto p = mv_equality_protocol(f);
  EXPECT_TRUE(core::verify_exhaustive(p, core::equality_table(2)).ok());
  EXPECT_EQ(core::measure(p).cost.degree.value_or(0), 2u);
  EXPECT_EQ(p.modulus(), 6u);
}

}  // namespace
}  // namespace bsmwb::polydeg
