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

#include <algorithm>
#include <set>

#include "bsmwb/bridges/bridges.hpp"
#include "bsmwb/core/error.hpp"
#include "bsmwb/core/verify.hpp"
#include "test_util.hpp"

namespace bsmwb::bridges {
namespace {

using testing::random_table;

IhScheme xor_scheme(const TruthTable& g) {
  return xor_bsm_to_ih(core::lookup_protocol(core::combined(g, core::Combiner::kXor)), g);
}

TEST(XorIh, CorrectAndUniformOnEveryPair) {
  core::Rng rng(1);
  for (int n = 1; n <= 4; ++n) {
    const auto g = random_table(rng, n);
    const auto a = audit_ih(xor_scheme(g));
    EXPECT_EQ(a.pairs_checked, std::uint64_t{1} << (2 * n));
    EXPECT_TRUE(a.correct());
    EXPECT_TRUE(a.private_());
    EXPECT_TRUE(a.uniform_a && a.uniform_b);
  }
}

TEST(XorIh, RejectsAWrongProtocol) {
  const auto g = core::parity_table(2);
  EXPECT_THROW(xor_bsm_to_ih(core::lookup_protocol(core::combined(g, core::Combiner::kOr)), g), Error);
}

TEST(XorIh, CorruptedAnswerIsDetected) {
  const auto s = xor_scheme(core::parity_table(3));
  const auto a = audit_ih(corrupt_answer(s, true, 5));
  // Query 5 to oracle B occurs once for every input.
  EXPECT_EQ(a.wrong.size(), 8u);
}

TEST(XorIh, RoundTripThroughIhToBsm) {
  core::Rng rng(2);
  for (int n = 1; n <= 4; ++n) {
    const auto g = random_table(rng, n);
    const auto res = ih_to_bsm(xor_scheme(g));
    EXPECT_TRUE(std::all_of(res.reachable.begin(), res.reachable.end(), [](auto r) { return r != 0; }));
    EXPECT_EQ(res.target, core::combined(g, core::Combiner::kXor));
    EXPECT_TRUE(core::verify_exhaustive(res.protocol, res.target).ok());
  }
}

TEST(SplitHide, SatFamilyIsCorrectAndPrivate) {
  const auto fam = split_family(splithide::ReductionId::kSat, 1);
  EXPECT_EQ(fam.randomness_count, 24u);
  const auto index = index_split_queries(fam);
  const auto s = splithide_bsm_to_ih(fam, index, split_language_lookup(fam, index));
  const auto a = audit_ih(s);
  EXPECT_TRUE(a.correct());
  EXPECT_TRUE(a.private_());
  // Target: SAT of a subset of {x1, not x1}.
  EXPECT_EQ(s.target.values(), (std::vector<std::uint8_t>{1, 1, 1, 0}));
}

TEST(SplitHide, IdentityFamilyIsRefused) {
  const auto fam = identity_split_family(2);
  const auto index = index_split_queries(fam);
  EXPECT_THROW(splithide_bsm_to_ih(fam, index, split_language_lookup(fam, index)), Error);
}

TEST(SplitHide, PartitionHasNoFamily) {
  EXPECT_THROW(split_family(splithide::ReductionId::kPartition, 2), Error);
}

TEST(IhToBsm, CollisionIsReportedWithWitness) {
  IhScheme s = xor_scheme(core::parity_table(2));
  // Make both oracles see the same pair of queries for two inputs.
  s.query_a[1 * s.randomness_count + 0] = s.query_a[0];
  s.query_b[1 * s.randomness_count + 0] = s.query_b[0];
  const auto w = find_query_collision(s);
  ASSERT_TRUE(w.has_value());
  EXPECT_NE(w->first.x, w->second.x);
}

TEST(Smooth, HadamardDecodesAndIsSmooth) {
  for (int n = 1; n <= 4; ++n) {
    const auto a = audit_smooth_code(hadamard_code(n));
    EXPECT_EQ(a.decoding_errors, 0u);
    EXPECT_TRUE(a.smooth);
  }
  EXPECT_FALSE(audit_smooth_code(biased_hadamard_code(3)).smooth);
  EXPECT_THROW(smooth_code_by_name("reed-muller", 3), Error);
}

TEST(Pir, HadamardPirHidesTheIndex) {
  const auto pir = smooth_ldc_to_pir(hadamard_code(3));
  const auto a = audit_pir(pir);
  EXPECT_EQ(a.errors, 0u);
  EXPECT_TRUE(a.index_hidden);
  EXPECT_THROW(smooth_ldc_to_pir(biased_hadamard_code(3)), Error);
}

TEST(Pir, RepetitionCodeIsAValidTwoServerScheme) {
  const auto a = audit_pir(smooth_ldc_to_pir(repetition_code()));
  EXPECT_EQ(a.errors, 0u);
  EXPECT_TRUE(a.index_hidden);
}

TEST(Pir, PirToIhComputesTheFunction) {
  const auto pir = smooth_ldc_to_pir(hadamard_code(4));
  const auto f = core::and_table(2);
  const auto a = audit_ih(pir_to_ih(pir, f));
  EXPECT_TRUE(a.correct());
  EXPECT_TRUE(a.private_());
}

TEST(Json, SchemeAndPirRoundTrip) {
  const auto s = xor_scheme(core::parity_table(2));
  const auto j = ih_scheme_to_json(s);
  EXPECT_EQ(core::dump_canonical(ih_scheme_to_json(ih_scheme_from_json(j))), core::dump_canonical(j));
  const auto pir = smooth_ldc_to_pir(hadamard_code(2));
  const auto pj = pir_scheme_to_json(pir);
  EXPECT_EQ(core::dump_canonical(pir_scheme_to_json(pir_scheme_from_json(pj))), core::dump_canonical(pj));
}

TEST(Permutations, UnrankIsABijection) {
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint64_t r = 0; r < 24; ++r) seen.insert(permutation_unrank(4, r));
  EXPECT_EQ(seen.size(), 24u);
  EXPECT_EQ(permutation_unrank(3, 0), (std::vector<std::uint32_t>{0, 1, 2}));
}

}  // namespace
}  // namespace bsmwb::bridges
