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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bsmwb/core/rng.hpp"

namespace bsmwb::matmul {

using Rational = boost::multiprecision::cpp_rational;

// "p" or "p/q" with integers p, q (q > 0). Anything else is rejected.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

// Variables are names; X-side names start with 'X', Y-side with 'Y'.
bool is_x_variable(const std::string& name);
bool is_y_variable(const std::string& name);

// Sparse polynomial over Q; a monomial is the sorted multiset of its
// variable names.
class RationalPoly {
 public:
  using Monomial = std::vector<std::string>;

  RationalPoly() = default;
  static RationalPoly constant(const Rational& q);
  static RationalPoly variable(const std::string& name);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(Monomial m, const Rational& coeff);

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly scaled(const Rational& q) const;

  // Sum of the monomials with exactly dx X-variables and dy Y-variables.
  RationalPoly graded_part(int dx, int dy) const;
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  bool operator==(const RationalPoly&) const = default;
  std::string to_string() const;
  // Sums of terms like "3/2*X11^2*Y12"; '-' separates negated terms.
  static RationalPoly parse(const std::string& text);

 private:
  std::map<Monomial, Rational> terms_;
};

enum class ArithOp { kAlice, kBob, kConst, kAdd, kMul, kScale };

struct ArithGate {
  ArithOp op;
  std::string name;
  std::vector<std::uint32_t> inputs;
  Rational value = 0;     // constant, or the scalar of kScale
  RationalPoly binding;   // leaf polynomial for kAlice / kBob
};

// Line IR:
//   alice X11                  leaf bound to the variable X11
//   alice A1 := X11^2 + X11    leaf bound to a polynomial in X
//   bob Y11
//   w3 = mul w1 w2
//   w4 = add w3 c(3/2) ...     two or more operands
//   w5 = smul c(-1) w4
//   out Z11 w5
class ArithCircuit {
 public:
  using Wire = std::uint32_t;

  Wire alice(const std::string& name, RationalPoly binding);
  Wire bob(const std::string& name, RationalPoly binding);
  Wire constant(const Rational& q);
  Wire add(std::vector<Wire> inputs, const std::string& name = "");
  Wire mul(Wire a, Wire b, const std::string& name = "");
  Wire scale(const Rational& q, Wire a, const std::string& name = "");
  void add_output(const std::string& name, Wire w);

  const std::vector<ArithGate>& gates() const { return gates_; }
  const std::vector<std::pair<std::string, Wire>>& outputs() const { return outputs_; }
  std::uint64_t multiplication_count() const;

  static ArithCircuit parse(const std::string& text);
  std::string to_text() const;

 private:
  Wire push(ArithGate g);

  std::vector<ArithGate> gates_;
  std::vector<std::pair<std::string, Wire>> outputs_;
};

// Full symbolic value of every output.
std::vector<RationalPoly> expand_outputs(const ArithCircuit& c);

struct LowDegreeParts {
  Rational c = 0;
  std::map<std::string, Rational> a;
  std::map<std::string, Rational> b;
  std::map<std::pair<std::string, std::string>, Rational> ab;

  bool operator==(const LowDegreeParts&) const = default;
};

// Truncation of an expanded polynomial to bidegrees (0,0), (1,0), (0,1), (1,1).
LowDegreeParts truncate_low_degree(const RationalPoly& p);

using LinearForm = std::map<std::string, Rational>;

// One rank-one bilinear piece: x-form times y-form, contributing with the
// given weight to each named output.
struct TensorTerm {
  LinearForm x;
  LinearForm y;
  std::map<std::string, Rational> weights;

  bool operator==(const TensorTerm&) const = default;
};

struct TensorDecomposition {
  std::vector<TensorTerm> terms;

  std::size_t rank_bound() const { return terms.size(); }
  // The bilinear map per output, expanded.
  std::map<std::string, std::map<std::pair<std::string, std::string>, Rational>> expand() const;
  std::string to_json() const;
  static TensorDecomposition from_json(const std::string& text);
};

struct Extraction {
  std::vector<std::string> output_names;
  std::vector<LowDegreeParts> parts;  // per output
  TensorDecomposition decomposition;
  std::uint64_t multiplication_count = 0;
};

// Leaves keep only the constant and linear part of their binding; each
// multiply gate P*Q contributes a(P) (x) b(Q) and a(Q) (x) b(P). Terms with a
// zero factor or zero weight everywhere are dropped.
Extraction extract_low_degree(const ArithCircuit& c);

// Names for the n x n product: X{i}{j}, Y{j}{k}, Z{i}{k} (1-based, n <= 9).
std::string entry_name(char matrix, int i, int j);

struct DecompositionCheck {
  bool coefficients_match = false;
  bool spot_checks_pass = false;
  bool ok() const { return coefficients_match && spot_checks_pass; }
};

// Coefficient comparison against Z = XY, plus `spot_checks` random rational
// matrix pairs evaluated exactly.
DecompositionCheck verify_decomposition(const TensorDecomposition& d, int n,
                                        std::uint64_t seed = 1, int spot_checks = 100);

TensorDecomposition canonical_decomposition(int n);

// Random circuit over the 2x2 entries with `gates` internal gates; leaves
// may carry nonlinear bindings. Used for the homomorphism property.
ArithCircuit random_circuit(core::Rng& rng, int gates);

}  // namespace bsmwb::matmul
