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

#include "bsmwb/core/error.hpp"
#include "bsmwb/core/protocol_io.hpp"
#include "bsmwb/core/verify.hpp"
#include "test_util.hpp"

namespace bsmwb::core {
namespace {

using testing::random_table;

TEST(TruthTable, IndexConventionPutsFirstVariableInTheLowBit) {
  // f(x1, x2) = x1 and not x2 is true only at index 1.
  const auto f = tabulate([](std::uint64_t z) { return (z & 1) && !(z & 2); }, 2);
  EXPECT_EQ(f.values(), (std::vector<std::uint8_t>{0, 1, 0, 0}));
  EXPECT_TRUE(f.at(1, 0));
  EXPECT_FALSE(f.at(1, 1));
}

TEST(TruthTable, EqualityOracleHasOneTruePointPerInput) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(equality_table(n).count_ones(), std::uint64_t{1} << n);
}

TEST(TruthTable, HexAndTextRoundTrip) {
  Rng rng(11);
  for (int arity : {0, 1, 3, 6}) {
    const auto t = random_table(rng, arity);
    EXPECT_EQ(TruthTable::from_hex(arity, t.to_hex()), t);
    EXPECT_EQ(truth_table_from_text(truth_table_to_text(t)), t);
  }
}

TEST(TruthTable, TextParseErrorsAreParseKind) {
  try {
    truth_table_from_text("arity 2\nzz\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
  }
  EXPECT_THROW(truth_table_from_text("0f\n"), Error);
}

TEST(TruthTable, CombinersMatchBitwiseDefinition) {
  Rng rng(3);
  const auto g = random_table(rng, 3);
  const auto f_or = combined(g, Combiner::kOr);
  const auto f_and = combined(g, Combiner::kAnd);
  const auto f_xor = combined(g, Combiner::kXor);
  for (std::uint64_t x = 0; x < 8; ++x) {
    for (std::uint64_t y = 0; y < 8; ++y) {
      EXPECT_EQ(f_or.at(x, y), g[x | y]);
      EXPECT_EQ(f_and.at(x, y), g[x & y]);
      EXPECT_EQ(f_xor.at(x, y), g[x ^ y]);
    }
  }
}

TEST(TruthTable, MonotoneCheck) {
  EXPECT_TRUE(is_monotone(or_table(3)));
  EXPECT_TRUE(is_monotone(and_table(3)));
  EXPECT_FALSE(is_monotone(parity_table(2)));
}

TEST(Limits, CeilingIsACapacityError) {
  Limits l{8, false};
  EXPECT_NO_THROW(l.check(8, "x"));
  try {
    l.check(9, "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapacity);
  }
}

TEST(Rng, SameSeedSameStreamAndPermutationsArePermutations) {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(), b.next());
  auto p = a.permutation(20);
  std::sort(p.begin(), p.end());
  for (std::uint32_t i = 0; i < 20; ++i) EXPECT_EQ(p[i], i);
}

TEST(Circuit, SlicedEvaluationAgreesWithScalar) {
  BooleanCircuit c;
  auto a0 = c.alice(0), a1 = c.alice(1), b0 = c.bob(0);
  auto g = c.add_xor({c.add_and({a0, b0}), c.add_not(a1), c.add_or({a1, b0})});
  c.set_output(g);
  EXPECT_EQ(c.gate_count(), 4u);
  std::vector<std::uint64_t> aw(2, 0), bw(1, 0);
  for (int t = 0; t < 8; ++t) {
    aw[0] |= std::uint64_t(t & 1) << t;
    aw[1] |= std::uint64_t((t >> 1) & 1) << t;
    bw[0] |= std::uint64_t((t >> 2) & 1) << t;
  }
  const auto sliced = c.evaluate_sliced(aw, bw);
  for (int t = 0; t < 8; ++t) {
    const std::uint8_t a[2] = {std::uint8_t(t & 1), std::uint8_t((t >> 1) & 1)};
    const std::uint8_t b[1] = {std::uint8_t((t >> 2) & 1)};
    const bool expect = (((t & 1) && (t >> 2 & 1)) ^ !((t >> 1) & 1) ^ (((t >> 1) | (t >> 2)) & 1));
    EXPECT_EQ(c.evaluate(a, b), expect) << t;
    EXPECT_EQ(((sliced >> t) & 1) != 0, expect) << t;
  }
}

TEST(Circuit, RejectsForwardReferences) {
  std::vector<Gate> gates = {{GateOp::kAnd, 0, {1}}, {GateOp::kAliceInput, 0, {}}};
  EXPECT_THROW(BooleanCircuit::from_gates(gates, 0), Error);
}

TEST(Polynomial, ReducesModuloAndEvaluates) {
  ModularPolynomial p(6, 3);
  p.add_term({0, 1}, 7);   // x0 x1 with coefficient 1
  p.add_term({2}, -1);     // 5 x2
  p.add_term({}, 6);       // vanishes
  EXPECT_EQ(p.monomials().size(), 2u);
  EXPECT_EQ(p.degree(), 2u);
  const std::uint8_t pt[3] = {1, 1, 1};
  EXPECT_EQ(p.evaluate(pt), (1 + 5) % 6u);
  EXPECT_EQ(ModularPolynomial::from_strings(6, 3, p.to_strings()), p);
}

TEST(Verify, LookupProtocolIsExactOnRandomFunctions) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const auto f = random_table(rng, 2 * n);
    const auto report = verify_exhaustive(lookup_protocol(f), f);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.pairs_checked, std::uint64_t{1} << (2 * n));
  }
}

TEST(Verify, FindsEveryWrongPair) {
  Rng rng(8);
  const auto f = random_table(rng, 6);
  auto values = f.values();
  values[5] ^= 1;
  values[40] ^= 1;
  const auto report = verify_exhaustive(lookup_protocol(f), TruthTable(6, values));
  ASSERT_EQ(report.mismatches.size(), 2u);
  EXPECT_EQ(report.mismatches[0].x + (report.mismatches[0].y << 3) , 5u);
}

TEST(Verify, ParallelMergeIsDeterministic) {
  Rng rng(9);
  const auto f = random_table(rng, 8);
  auto values = f.values();
  for (int i = 0; i < 256; i += 7) values[i] ^= 1;
  const TruthTable wrong(8, values);
  const auto one = verify_exhaustive(lookup_protocol(f), wrong, {{}, 1});
  const auto four = verify_exhaustive(lookup_protocol(f), wrong, {{}, 4});
  EXPECT_EQ(one.mismatches, four.mismatches);
}

TEST(Verify, OpaqueCarolIsUnaudited) {
  const auto f = equality_table(2);
  OpaqueCarol o{"eq", [](std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
                  return std::equal(a.begin(), a.end(), b.begin(), b.end());
                }};
  BsmProtocol p = BsmProtocol::from_maps(
      2, 2, [](std::uint64_t x) { return std::vector<std::uint8_t>{std::uint8_t(x & 1), std::uint8_t(x >> 1)}; },
      [](std::uint64_t y) { return std::vector<std::uint8_t>{std::uint8_t(y & 1), std::uint8_t(y >> 1)}; },
      CarolEvaluator::opaque(o, CarolCost{3, {}, {}, {}}));
  const auto r = verify_exhaustive(p, f);
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.audited);
}

TEST(Measure, RecomputedCostMatchesDeclared) {
  Rng rng(2);
  const auto m = measure(lookup_protocol(random_table(rng, 4)));
  EXPECT_TRUE(m.audited);
  EXPECT_EQ(m.alice_length, 2u);
}

TEST(Measure, TamperedDeclaredCostIsAnIntegrityError) {
  BooleanCircuit c;
  c.set_output(c.add_and({c.alice(0), c.bob(0)}));
  const CarolEvaluator carol(c, CarolCost{5, {}, {}, {}});
  const BsmProtocol p(1, 2, 1, {0, 1}, 1, {0, 1}, carol);
  try {
    measure(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIntegrity);
  }
}

TEST(ProtocolIo, RoundTripIsByteIdentical) {
  Rng rng(4);
  const auto p = lookup_protocol(random_table(rng, 6));
  const auto text = dump_canonical(protocol_to_json(p));
  const auto back = protocol_from_json(parse_document(text, "p"));
  EXPECT_EQ(dump_canonical(protocol_to_json(back)), text);
}

TEST(ProtocolIo, ParseErrorCarriesLineAndColumn) {
  try {
    parse_document("{\n  \"a\": ,\n}", "doc");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("doc:2:"), std::string::npos) << e.what();
  }
}

TEST(ProtocolIo, OutOfAlphabetSymbolIsMalformed) {
  const BsmProtocol p(1, 2, 1, {0, 3}, 1, {0, 1}, CarolEvaluator::lookup({0, 0, 0, 1}));
  try {
    p.check_well_formed();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMalformed);
  }
}

}  // namespace
}  // namespace bsmwb::core
