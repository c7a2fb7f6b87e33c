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

#include "bsmwb/core/protocol.hpp"

#include "bsmwb/core/error.hpp"
#include "bsmwb/core/truth_table.hpp"

namespace bsmwb::core {

std::string carol_kind_name(CarolKind kind) {
  switch (kind) {
    case CarolKind::kCircuit:
      return "boolean-circuit";
    case CarolKind::kPolynomial:
      return "modular-polynomial-with-predicate";
    case CarolKind::kLookup:
      return "lookup-table";
    case CarolKind::kOpaque:
      return "opaque-procedure";
  }
  return "?";
}

CarolEvaluator::CarolEvaluator(Payload payload, CarolCost declared)
    : payload_(std::move(payload)), declared_(declared) {
  if (auto* p = std::get_if<PolynomialCarol>(&payload_)) {
    require(p->predicate.size() == p->poly.modulus(), "predicate must cover all of Z_m");
    for (auto v : p->predicate) require(v <= 1, "predicate values must be bits");
    require(declared_.degree.has_value(), "polynomial Carol needs a declared degree");
  }
  if (auto* o = std::get_if<OpaqueCarol>(&payload_)) {
    require(static_cast<bool>(o->fn), "opaque Carol needs a procedure");
  }
}

CarolEvaluator CarolEvaluator::circuit(BooleanCircuit c) {
  CarolCost cost{c.gate_count(), std::nullopt, c.depth(), std::nullopt};
  return CarolEvaluator(std::move(c), cost);
}

CarolEvaluator CarolEvaluator::polynomial(ModularPolynomial p, std::vector<std::uint8_t> predicate) {
  CarolCost cost{p.monomials().size(), p.degree(), std::nullopt, std::nullopt};
  return CarolEvaluator(PolynomialCarol{std::move(p), std::move(predicate)}, cost);
}

CarolEvaluator CarolEvaluator::lookup(std::vector<std::uint8_t> table) {
  CarolCost cost{table.size(), std::nullopt, std::nullopt, std::nullopt};
  return CarolEvaluator(LookupCarol{std::move(table)}, cost);
}

CarolEvaluator CarolEvaluator::opaque(OpaqueCarol o, CarolCost declared) {
  return CarolEvaluator(std::move(o), declared);
}

CarolKind CarolEvaluator::kind() const { return static_cast<CarolKind>(payload_.index()); }

CarolEvaluator CarolEvaluator::with_offsets(std::uint32_t alice_offset,
                                            std::uint32_t bob_offset) const {
  CarolEvaluator c = *this;
  c.alice_offset_ = alice_offset;
  c.bob_offset_ = bob_offset;
  return c;
}

bool CarolEvaluator::evaluate(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                              std::uint32_t modulus) const {
  if (a.size() < alice_offset_ || b.size() < bob_offset_) {
    fail(ErrorKind::kMalformed, "message shorter than Carol's read offset");
  }
  a = a.subspan(alice_offset_);
  b = b.subspan(bob_offset_);
  switch (kind()) {
    case CarolKind::kCircuit:
      return std::get<BooleanCircuit>(payload_).evaluate(a, b);
    case CarolKind::kPolynomial: {
      const auto& p = std::get<PolynomialCarol>(payload_);
      return p.predicate[p.poly.evaluate(a, b)] != 0;
    }
    case CarolKind::kLookup: {
      const auto& t = std::get<LookupCarol>(payload_).table;
      std::uint64_t index = 0;
      std::uint64_t weight = 1;
      for (auto s : a) {
        index += s * weight;
        weight *= modulus;
      }
      for (auto s : b) {
        index += s * weight;
        weight *= modulus;
      }
      if (index >= t.size()) fail(ErrorKind::kMalformed, "lookup index beyond Carol's table");
      return t[index] != 0;
    }
    case CarolKind::kOpaque:
      return std::get<OpaqueCarol>(payload_).fn(a, b);
  }
  return false;
}

CarolCost CarolEvaluator::recompute_cost() const {
  switch (kind()) {
    case CarolKind::kCircuit: {
      const auto& c = std::get<BooleanCircuit>(payload_);
      return {c.gate_count(), declared_.degree, c.depth(), declared_.multiplication_gates};
    }
    case CarolKind::kPolynomial: {
      const auto& p = std::get<PolynomialCarol>(payload_);
      return {p.poly.monomials().size(), p.poly.degree(), declared_.depth,
              declared_.multiplication_gates};
    }
    case CarolKind::kLookup:
      return {std::get<LookupCarol>(payload_).table.size(), declared_.degree, declared_.depth,
              declared_.multiplication_gates};
    case CarolKind::kOpaque:
      return declared_;
  }
  return declared_;
}

BsmProtocol::BsmProtocol(int input_arity, std::uint32_t modulus, std::uint32_t alice_length,
                         std::vector<std::uint8_t> alice_table, std::uint32_t bob_length,
                         std::vector<std::uint8_t> bob_table, CarolEvaluator carol)
    : n_(input_arity),
      modulus_(modulus),
      alice_length_(alice_length),
      alice_table_(std::move(alice_table)),
      bob_length_(bob_length),
      bob_table_(std::move(bob_table)),
      carol_(std::move(carol)) {
  require(n_ >= 0 && n_ < 31, "input arity out of range");
  require(modulus_ >= 2 && modulus_ <= 16, "alphabet modulus must be in [2, 16]");
  require(alice_table_.size() == input_count() * alice_length_,
          "Alice's table must hold one message per input");
  require(bob_table_.size() == input_count() * bob_length_,
          "Bob's table must hold one message per input");
}

BsmProtocol BsmProtocol::from_maps(
    int input_arity, std::uint32_t modulus,
    const std::function<std::vector<std::uint8_t>(std::uint64_t)>& alice,
    const std::function<std::vector<std::uint8_t>(std::uint64_t)>& bob, CarolEvaluator carol) {
  const std::uint64_t count = std::uint64_t{1} << input_arity;
  auto build = [&](const auto& map, std::uint32_t& length, const char* who) {
    std::vector<std::uint8_t> table;
    for (std::uint64_t x = 0; x < count; ++x) {
      auto msg = map(x);
      if (x == 0) {
        length = static_cast<std::uint32_t>(msg.size());
        table.reserve(count * length);
      }
      require(msg.size() == length, std::string(who) + "'s messages differ in length");
      table.insert(table.end(), msg.begin(), msg.end());
    }
    return table;
  };
  std::uint32_t la = 0, lb = 0;
  auto ta = build(alice, la, "Alice");
  auto tb = build(bob, lb, "Bob");
  return BsmProtocol(input_arity, modulus, la, std::move(ta), lb, std::move(tb), std::move(carol));
}

Message BsmProtocol::alice_message(std::uint64_t x) const {
  auto s = alice(x);
  return {modulus_, {s.begin(), s.end()}};
}

Message BsmProtocol::bob_message(std::uint64_t y) const {
  auto s = bob(y);
  return {modulus_, {s.begin(), s.end()}};
}

void BsmProtocol::check_well_formed() const {
  for (auto s : alice_table_) {
    if (s >= modulus_) fail(ErrorKind::kMalformed, "Alice symbol outside the alphabet");
  }
  for (auto s : bob_table_) {
    if (s >= modulus_) fail(ErrorKind::kMalformed, "Bob symbol outside the alphabet");
  }
  const std::uint64_t la = alice_length_ - std::min(alice_length_, carol_.alice_offset());
  const std::uint64_t lb = bob_length_ - std::min(bob_length_, carol_.bob_offset());
  switch (carol_.kind()) {
    case CarolKind::kCircuit: {
      const auto& c = std::get<BooleanCircuit>(carol_.payload());
      if (modulus_ != 2) fail(ErrorKind::kMalformed, "circuit Carol needs a binary alphabet");
      if (c.alice_width() > la || c.bob_width() > lb) {
        fail(ErrorKind::kMalformed, "circuit reads beyond the message length");
      }
      break;
    }
    case CarolKind::kPolynomial: {
      const auto& p = std::get<PolynomialCarol>(carol_.payload());
      if (p.poly.modulus() != modulus_) {
        fail(ErrorKind::kMalformed, "polynomial modulus differs from the alphabet");
      }
      if (p.poly.variable_count() > la + lb) {
        fail(ErrorKind::kMalformed, "polynomial has more variables than message symbols");
      }
      break;
    }
    case CarolKind::kLookup: {
      const auto& t = std::get<LookupCarol>(carol_.payload()).table;
      long double need = 1;
      for (std::uint64_t i = 0; i < la + lb; ++i) need *= modulus_;
      if (static_cast<long double>(t.size()) != need) {
        fail(ErrorKind::kMalformed, "lookup table size does not match message shape");
      }
      break;
    }
    case CarolKind::kOpaque:
      break;
  }
}

BsmProtocol lookup_protocol(const TruthTable& f) {
  require(f.arity() % 2 == 0, "lookup protocol needs an even-arity target");
  const int n = f.arity() / 2;
  auto bits = [n](std::uint64_t v) {
    std::vector<std::uint8_t> out(n);
    for (int i = 0; i < n; ++i) out[i] = (v >> i) & 1;
    return out;
  };
  return BsmProtocol::from_maps(n, 2, bits, bits, CarolEvaluator::lookup(f.values()));
}

}  // namespace bsmwb::core
