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

#include <fstream>
#include <sstream>

#include "bsmwb/core/error.hpp"
#include "bsmwb/matmul/matmul.hpp"

namespace bsmwb::matmul {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ArithCircuit strassen() { return ArithCircuit::parse(read_file(BSMWB_DATA_DIR "/strassen.circ")); }

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(rational_to_string(Rational(-3, 9)), "-1/3");
  for (const char* bad : {"", "1/0", "1/-2", "x", "1.5", "1/2/3"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(Poly, ParseArithmeticAndGrading) {
  const auto p = RationalPoly::parse("3/2*X11^2*Y12 - X11 + 2");
  EXPECT_EQ(p.terms().size(), 3u);
  EXPECT_EQ(p.graded_part(2, 1).terms().size(), 1u);
  EXPECT_EQ(p.graded_part(1, 0), RationalPoly::variable("X11").scaled(-1));
  const auto q = RationalPoly::variable("X11") + RationalPoly::constant(1);
  const auto sq = q * q;
  EXPECT_EQ(sq.evaluate({{"X11", Rational(2)}}), Rational(9));
  EXPECT_EQ(RationalPoly::parse(sq.to_string()), sq);
  EXPECT_TRUE((q + q.scaled(-1)).is_zero());
}

TEST(Circuit, ParseReportsLine) {
  try {
    ArithCircuit::parse("alice X11\nw = frob X11\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Circuit, TextRoundTrip) {
  const auto c = strassen();
  EXPECT_EQ(c.multiplication_count(), 7u);
  const auto back = ArithCircuit::parse(c.to_text());
  EXPECT_EQ(expand_outputs(back), expand_outputs(c));
}

TEST(Truncation, KeepsOnlyLowBidegrees) {
  const auto p = RationalPoly::parse("5 + 2*X11 - Y21 + 4*X11*Y21 + X11^2 + X12*Y21^2");
  const auto t = truncate_low_degree(p);
  EXPECT_EQ(t.c, Rational(5));
  EXPECT_EQ(t.a.at("X11"), Rational(2));
  EXPECT_EQ(t.b.at("Y21"), Rational(-1));
  EXPECT_EQ(t.ab.size(), 1u);
  EXPECT_EQ(t.ab.at({"X11", "Y21"}), Rational(4));
}

TEST(Extraction, StrassenGivesSevenTermsAndVerifies) {
  const auto ex = extract_low_degree(strassen());
  EXPECT_EQ(ex.decomposition.rank_bound(), 7u);
  EXPECT_TRUE(verify_decomposition(ex.decomposition, 2).ok());
}

TEST(Extraction, DroppingAnyStrassenTermBreaksIt) {
  const auto d = extract_low_degree(strassen()).decomposition;
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    auto cut = d;
    cut.terms.erase(cut.terms.begin() + static_cast<std::ptrdiff_t>(i));
    EXPECT_FALSE(verify_decomposition(cut, 2).coefficients_match) << i;
  }
}

TEST(Extraction, AgreesWithTruncatedExpansionOnRandomCircuits) {
  core::Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = random_circuit(rng, 1 + trial % 8);
    const auto ex = extract_low_degree(c);
    const auto full = expand_outputs(c);
    ASSERT_EQ(full.size(), ex.parts.size());
    const auto bilinear = ex.decomposition.expand();
    for (std::size_t o = 0; o < full.size(); ++o) {
      const auto trunc = truncate_low_degree(full[o]);
      EXPECT_EQ(trunc, ex.parts[o]) << trial;
      const auto it = bilinear.find(ex.output_names[o]);
      const std::map<std::pair<std::string, std::string>, Rational> none;
      EXPECT_EQ(it == bilinear.end() ? none : it->second, trunc.ab) << trial;
    }
    EXPECT_LE(ex.decomposition.rank_bound(), 2 * ex.multiplication_count);
  }
}

TEST(Decomposition, CanonicalIsExact) {
  for (int n = 1; n <= 3; ++n) {
    const auto d = canonical_decomposition(n);
    EXPECT_EQ(d.rank_bound(), static_cast<std::size_t>(n * n * n));
    EXPECT_TRUE(verify_decomposition(d, n).ok());
  }
}

TEST(Decomposition, JsonRoundTripAndErrors) {
  const auto d = extract_low_degree(strassen()).decomposition;
  const auto back = TensorDecomposition::from_json(d.to_json());
  EXPECT_EQ(back.terms, d.terms);
  EXPECT_THROW(TensorDecomposition::from_json("{}"), Error);
  EXPECT_THROW(TensorDecomposition::from_json("not json"), Error);
}

TEST(Decomposition, WrongCoefficientFailsSpotChecks) {
  auto d = canonical_decomposition(2);
  d.terms[0].weights.begin()->second = Rational(2);
  const auto check = verify_decomposition(d, 2);
  EXPECT_FALSE(check.coefficients_match);
  EXPECT_FALSE(check.spot_checks_pass);
}

TEST(Names, EntryName) {
  EXPECT_EQ(entry_name('X', 1, 2), "X12");
  EXPECT_EQ(entry_name('Z', 3, 3), "Z33");
}

}  // namespace
}  // namespace bsmwb::matmul
