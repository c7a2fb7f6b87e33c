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

#include "bsmwb/combine/combine.hpp"
#include "bsmwb/core/error.hpp"
#include "bsmwb/core/verify.hpp"
#include "test_util.hpp"

namespace bsmwb::combine {
namespace {

using core::Combiner;
using testing::random_monotone;
using testing::random_table;

bool exact(const BsmProtocol& p, const TruthTable& g, Combiner op) {
  return core::verify_exhaustive(p, core::combined(g, op)).ok();
}

TEST(Dnf, EvaluationMatchesLiteralSemantics) {
  // (z1 and not z3) or z2
  const auto d = Dnf::from_literals(3, {{1, -3}, {2}});
  for (std::uint64_t z = 0; z < 8; ++z) {
    const bool expect = ((z & 1) && !(z & 4)) || (z & 2);
    EXPECT_EQ(d.evaluate(z), expect);
  }
  EXPECT_EQ(d.width(), 2);
  EXPECT_FALSE(d.monotone());
  EXPECT_THROW(Dnf::from_literals(2, {{3}}), Error);
}

TEST(Dnf, UnateOrientation) {
  EXPECT_TRUE(Dnf::from_literals(3, {{1, -2}, {-2, 3}}).unate_orientation().has_value());
  EXPECT_FALSE(Dnf::from_literals(2, {{1, 2}, {-1}}).unate_orientation().has_value());
}

TEST(Dnf, MonotoneDnfIsMinimalAndEquivalent) {
  core::Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_monotone(rng, 6, 1 + trial % 5);
    const auto d = monotone_dnf(g);
    EXPECT_EQ(d.to_table(), g);
    for (const auto& t : d.terms()) {
      for (const auto& u : d.terms()) {
        if (t.pos == u.pos) continue;
        EXPECT_NE(t.pos & u.pos, t.pos) << "term contains another";
      }
    }
  }
  EXPECT_THROW(monotone_dnf(core::parity_table(3)), Error);
}

TEST(Dnf, CanonicalDnfMatches) {
  core::Rng rng(2);
  const auto g = random_table(rng, 5);
  EXPECT_EQ(canonical_dnf(g).to_table(), g);
  EXPECT_EQ(canonical_dnf(g).terms().size(), g.count_ones());
}

TEST(WidthProtocol, ExactOnRandomMonotone) {
  core::Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_monotone(rng, 6, 2 + trial % 4);
    const auto d = monotone_dnf(g);
    EXPECT_TRUE(exact(monotone_width_protocol_or(d, d.width()), g, Combiner::kOr));
  }
}

TEST(WidthProtocol, RejectsWidthAboveTheClaim) {
  const auto d = Dnf::from_literals(4, {{1, 2, 3}});
  EXPECT_THROW(monotone_width_protocol_or(d, 2), Error);
}

TEST(WidthProtocol, UnateTermsWithNegationsAreExact) {
  core::Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Term> terms;
    for (int k = 0; k < 4; ++k) {
      const std::uint64_t pos = rng.uniform(64);
      terms.push_back({pos, rng.uniform(64) & ~pos & 0x30});
    }
    const Dnf d(6, terms);
    ProtocolBuilder b(6);
    const auto out = attach_width_engine(b, d);
    EXPECT_TRUE(exact(std::move(b).build(out), d.to_table(), Combiner::kOr));
  }
}

TEST(DnfAnd, ExactOnRandomFunctions) {
  core::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_table(rng, 5);
    EXPECT_TRUE(exact(dnf_protocol_and(canonical_dnf(g)), g, Combiner::kAnd));
  }
}

TEST(DnfAnd, EmptyTermIsConstantTrue) {
  const Dnf d(3, {Term{}});
  EXPECT_TRUE(exact(dnf_protocol_and(d), core::constant_table(3, true), Combiner::kAnd));
}

TEST(Monotone, ProtocolIsExact) {
  core::Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_monotone(rng, 7, 1 + trial);
    EXPECT_TRUE(exact(monotone_protocol_or(g), g, Combiner::kOr));
  }
}

TEST(Dual, AndProtocolFromOrBuilder) {
  core::Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = random_monotone(rng, 6, 3);
    EXPECT_EQ(dual_function(dual_function(g)), g);
    EXPECT_TRUE(exact(dual_and_protocol(g, monotone_protocol_or), g, Combiner::kAnd));
  }
}

TEST(Alternation, ParityHasFullAlternation) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(alternation_levels(core::parity_table(n)).back(), n);
  EXPECT_EQ(alternation_levels(core::or_table(4)).back(), 1);
}

TEST(Alternation, PartsAreMonotoneAndTelescope) {
  core::Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_table(rng, 6);
    const auto d = alternation_decompose(g);
    for (const auto& p : d.parts) EXPECT_TRUE(core::is_monotone(p));
    for (std::uint64_t z = 0; z < g.size(); ++z) {
      bool v = d.base;
      for (const auto& p : d.parts) v ^= p[z];
      EXPECT_EQ(v, g[z]);
    }
  }
}

TEST(Alternation, ProtocolIsExact) {
  core::Rng rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = random_table(rng, 6);
    EXPECT_TRUE(exact(alternation_protocol_or(g), g, Combiner::kOr));
  }
}

TEST(Alternation, WeightSlicesAreUnateAndCoverG) {
  core::Rng rng(10);
  const auto g = random_table(rng, 6);
  const auto slices = weight_slice_unate(g);
  ASSERT_EQ(slices.size(), 7u);
  for (std::size_t i = 0; i < slices.size(); ++i) {
    EXPECT_TRUE(slices[i].unate_orientation().has_value());
    for (std::uint64_t z = 0; z < g.size(); ++z) {
      if (std::popcount(z) != static_cast<int>(i)) continue;
      EXPECT_EQ(slices[i].evaluate(z), g[z]);
    }
  }
}

TEST(Covering, GreedyCodesCover) {
  for (int n = 1; n <= 10; ++n) {
    for (int r = 0; r <= n; ++r) EXPECT_TRUE(greedy_covering_code(n, r).covers()) << n << " " << r;
  }
  EXPECT_EQ(greedy_covering_code(3, 1).codewords.size(), 2u);  // 000 and 111
  EXPECT_EQ(greedy_covering_code(4, 0).codewords.size(), 16u);
}

TEST(Covering, DefaultRadius) {
  EXPECT_EQ(default_covering_radius(8), 3);   // 0.2929 * 8 = 2.34
  EXPECT_EQ(default_covering_radius(12), 4);  // 3.51
}

TEST(Covering, TextRoundTripAndParseErrors) {
  const auto code = greedy_covering_code(6, 2);
  const auto back = CoveringCode::from_text(code.to_text());
  EXPECT_EQ(back.codewords, code.codewords);
  try {
    CoveringCode::from_text("3 1\n010\n01x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("column 3"), std::string::npos);
  }
}

TEST(Covering, SliceSelectsPointsAtExactDistance) {
  core::Rng rng(11);
  const auto g = random_table(rng, 5);
  const std::uint64_t c = 0b10110;
  for (int j = 0; j <= 5; ++j) {
    const auto d = covering_slice(g, c, j);
    for (std::uint64_t z = 0; z < g.size(); ++z) {
      if (std::popcount(z ^ c) != j) continue;
      EXPECT_EQ(d.evaluate(z), g[z]) << z;
    }
  }
}

TEST(Covering, ProtocolIsExactAndSizeEstimateAgrees) {
  core::Rng rng(12);
  for (int trial = 0; trial < 4; ++trial) {
    const auto g = random_table(rng, 6);
    const auto code = greedy_covering_code(6, 2);
    const auto p = covering_code_protocol_or(g, code);
    EXPECT_TRUE(exact(p, g, Combiner::kOr));
    const auto est = covering_code_size(g, code);
    EXPECT_EQ(est.alice_length, p.alice_length());
    EXPECT_EQ(est.carol_gates, core::measure(p).cost.gate_count);
  }
}

TEST(Covering, ParallelBuildIsDeterministic) {
  core::Rng rng(13);
  const auto g = random_table(rng, 6);
  const auto code = greedy_covering_code(6, 2);
  const auto a = covering_code_protocol_or(g, code, {1});
  const auto b = covering_code_protocol_or(g, code, {3});
  EXPECT_EQ(a.alice_table(), b.alice_table());
  EXPECT_EQ(a.bob_table(), b.bob_table());
}

TEST(Covering, RejectsNonCoveringCode) {
  const CoveringCode bad{4, 1, {0}};
  EXPECT_THROW(covering_code_protocol_or(core::or_table(4), bad), Error);
}

TEST(ToCircuit, EvaluatorMatchesG) {
  core::Rng rng(14);
  for (int n : {2, 4, 6}) {
    const auto g = random_table(rng, n);
    const auto ev = bsm_to_circuit(alternation_protocol_or(g));
    for (std::uint64_t z = 0; z < g.size(); ++z) EXPECT_EQ(ev.evaluate(z), g[z]);
  }
  EXPECT_THROW(bsm_to_circuit(parity_xor_protocol(3)), Error);
}

TEST(ToCircuit, ParityXorProtocol) {
  EXPECT_TRUE(exact(parity_xor_protocol(4), core::parity_table(4), Combiner::kXor));
}

TEST(Sizes, BinomialPrefix) {
  EXPECT_EQ(binomial_prefix(4, 0), 1u);
  EXPECT_EQ(binomial_prefix(4, 2), 11u);
  EXPECT_EQ(binomial_prefix(5, 9), 32u);
}

}  // namespace
}  // namespace bsmwb::combine
