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

#include "bsmwb/core/error.hpp"
#include "bsmwb/dovetail/dovetail.hpp"

namespace bsmwb::dovetail {
namespace {

DovetailResult run(const std::string& x, const std::string& y, const SemiDecider& m,
                   bool trace = false) {
  return carol_dovetail(alice_message(x, m), bob_message(y, m), m, {trace});
}

TEST(Shortlex, Order) {
  EXPECT_EQ(shortlex_up_to(2), (std::vector<std::string>{"", "0", "1", "00", "01", "10", "11"}));
  EXPECT_EQ(shortlex_up_to(0), (std::vector<std::string>{""}));
}

TEST(CountMessage, LayoutAndRoundTrip) {
  const auto m = alice_message("101", equality_language());
  EXPECT_EQ(m.count, 1u);
  EXPECT_EQ(m.to_bits(), "1010001");
  const auto back = CountMessage::from_bits(m.to_bits());
  EXPECT_EQ(back.input, "101");
  EXPECT_EQ(back.count, 1u);
  EXPECT_THROW(CountMessage::from_bits("10"), Error);
  EXPECT_THROW(CountMessage::from_bits("1a1"), Error);
}

TEST(Equality, AcceptsEqualRejectsOthers) {
  const auto eq = equality_language();
  EXPECT_TRUE(run("01", "01", eq).accept);
  const auto r = run("01", "10", eq);
  EXPECT_FALSE(r.accept);
  EXPECT_GE(r.accepted_found, 1u);
}

TEST(Equality, ZeroCountRejectsImmediately) {
  // x = "0" has no partner at all.
  const auto m = table_language("1 1 3\n");
  const auto r = run("0", "1", m);
  EXPECT_FALSE(r.accept);
  EXPECT_EQ(r.sweeps, 0u);
}

TEST(Dovetail, ExhaustiveSmallAgreesWithMembership) {
  for (const auto& m : {equality_language(), prefix_language()}) {
    for (const auto& x : shortlex_up_to(3)) {
      for (const auto& y : shortlex_up_to(3)) {
        const auto a = alice_message(x, m);
        const auto b = bob_message(y, m);
        EXPECT_LE(a.to_bits().size(), 2 * x.size() + 1);
        const auto r = carol_dovetail(a, b, m);
        EXPECT_EQ(r.accept, m.member(x, y)) << m.name << " " << x << " " << y;
        EXPECT_EQ(r.used_alice, y.size() <= x.size());
      }
    }
  }
}

TEST(Dovetail, TraceCsv) {
  const auto r = run("1", "1", equality_language(), true);
  ASSERT_FALSE(r.trace.empty());
  const auto csv = r.trace_csv();
  EXPECT_EQ(csv.rfind("sweep,budget,x,y,event\n", 0), 0u);
}

TEST(Dovetail, StepCeilingIsACapacityError) {
  const auto eq = equality_language();
  try {
    carol_dovetail(alice_message("111", eq), bob_message("111", eq), eq, {false, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapacity);
  }
}

TEST(TableLanguage, ParsesAndValidates) {
  const auto m = table_language("# demo\n- - 1\n01 0 5\n");
  EXPECT_TRUE(m.member("", ""));
  EXPECT_TRUE(m.member("01", "0"));
  EXPECT_FALSE(m.member("01", "1"));
  EXPECT_FALSE(m.accepts("01", "0", 4));
  EXPECT_TRUE(m.accepts("01", "0", 5));
  EXPECT_TRUE(run("01", "0", m).accept);
  EXPECT_FALSE(run("01", "1", m).accept);
  for (const char* bad : {"01 0\n", "0a 0 1\n", "0 0 0\n", "0 0 1\n0 0 2\n", "0000000 0 1\n"}) {
    try {
      table_language(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kParse) << bad;
    }
  }
}

TEST(Languages, ByName) {
  EXPECT_EQ(language_by_name("eq").name, equality_language().name);
  EXPECT_THROW(language_by_name("halting"), Error);
}

}  // namespace
}  // namespace bsmwb::dovetail
