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

#include "bsmwb/core/polynomial.hpp"

#include <algorithm>
#include <charconv>

#include "bsmwb/core/error.hpp"

namespace bsmwb::core {

ModularPolynomial::ModularPolynomial(std::uint32_t modulus, std::uint32_t variable_count)
    : modulus_(modulus), variable_count_(variable_count) {
  require(modulus >= 2, "polynomial modulus must be at least 2");
}

void ModularPolynomial::add_term(Monomial vars, std::int64_t coeff) {
  for (auto v : vars) require(v < variable_count_, "monomial variable out of range");
  std::sort(vars.begin(), vars.end());
  const auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t c = ((coeff % m) + m) % m;
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(vars), 0);
  it->second = static_cast<std::uint32_t>((it->second + c) % m);
  if (it->second == 0) terms_.erase(it);
}

std::uint64_t ModularPolynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [mono, c] : terms_) d = std::max<std::uint64_t>(d, mono.size());
  return d;
}

bool ModularPolynomial::multilinear() const {
  for (const auto& [mono, c] : terms_) {
    if (std::adjacent_find(mono.begin(), mono.end()) != mono.end()) return false;
  }
  return true;
}

std::uint32_t ModularPolynomial::evaluate(std::span<const std::uint8_t> point) const {
  return evaluate(point, {});
}

std::uint32_t ModularPolynomial::evaluate(std::span<const std::uint8_t> a,
                                          std::span<const std::uint8_t> b) const {
  require(a.size() + b.size() >= variable_count_, "evaluation point too short");
  std::uint64_t sum = 0;
  for (const auto& [mono, c] : terms_) {
    std::uint64_t prod = c;
    for (auto v : mono) {
      std::uint64_t s = v < a.size() ? a[v] : b[v - a.size()];
      prod = prod * s % modulus_;
      if (prod == 0) break;
    }
    sum += prod;
  }
  return static_cast<std::uint32_t>(sum % modulus_);
}

std::vector<std::string> ModularPolynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& [mono, c] : terms_) {
    std::string s = std::to_string(c) + ":";
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(mono[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::uint64_t parse_uint(std::string_view text, const std::string& line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || text.empty()) {
    fail(ErrorKind::kParse, "bad monomial '" + line + "'");
  }
  return v;
}

}  // namespace

ModularPolynomial ModularPolynomial::from_strings(std::uint32_t modulus,
                                                  std::uint32_t variable_count,
                                                  const std::vector<std::string>& lines) {
  ModularPolynomial p(modulus, variable_count);
  for (const auto& line : lines) {
    auto colon = line.find(':');
    if (colon == std::string::npos) fail(ErrorKind::kParse, "bad monomial '" + line + "'");
    std::uint64_t c = parse_uint(std::string_view(line).substr(0, colon), line);
    if (c == 0 || c >= modulus) fail(ErrorKind::kParse, "coefficient not reduced in '" + line + "'");
    Monomial mono;
    std::string_view rest = std::string_view(line).substr(colon + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      auto v = parse_uint(rest.substr(0, comma), line);
      if (v >= variable_count) fail(ErrorKind::kParse, "variable out of range in '" + line + "'");
      mono.push_back(static_cast<std::uint32_t>(v));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    p.add_term(std::move(mono), static_cast<std::int64_t>(c));
  }
  return p;
}

}  // namespace bsmwb::core
