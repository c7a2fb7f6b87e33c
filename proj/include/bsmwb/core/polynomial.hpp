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
#include <span>
#include <string>
#include <vector>

namespace bsmwb::core {

// Polynomial over Z_m. A monomial is a sorted multiset of variable indices
// (0-based); coefficients are kept nonzero and reduced mod m.
class ModularPolynomial {
 public:
  using Monomial = std::vector<std::uint32_t>;

  ModularPolynomial(std::uint32_t modulus, std::uint32_t variable_count);

  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t variable_count() const { return variable_count_; }
  const std::map<Monomial, std::uint32_t>& monomials() const { return terms_; }

  void add_term(Monomial vars, std::int64_t coeff);

  std::uint64_t degree() const;
  bool multilinear() const;

  std::uint32_t evaluate(std::span<const std::uint8_t> point) const;
  // Variables 0..a.size()-1 read `a`, the rest read `b`.
  std::uint32_t evaluate(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) const;

  // "coeff:i1,i2,..." per monomial in map order; the constant term is "coeff:".
  std::vector<std::string> to_strings() const;
  static ModularPolynomial from_strings(std::uint32_t modulus, std::uint32_t variable_count,
                                        const std::vector<std::string>& lines);

  bool operator==(const ModularPolynomial&) const = default;

 private:
  std::uint32_t modulus_;
  std::uint32_t variable_count_;
  std::map<Monomial, std::uint32_t> terms_;
};

}  // namespace bsmwb::core
