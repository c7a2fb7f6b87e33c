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

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "bsmwb/combine/combine.hpp"
#include "bsmwb/core/error.hpp"

namespace bsmwb::combine {

int Term::width() const { return std::popcount(pos) + std::popcount(neg); }

Dnf::Dnf(int variable_count, std::vector<Term> terms) : n_(variable_count), terms_(std::move(terms)) {
  require(n_ >= 0 && n_ <= 62, "DNF variable count out of range");
  const std::uint64_t all = (std::uint64_t{1} << n_) - 1;
  for (const auto& t : terms_) {
    require((t.pos & t.neg) == 0, "term contains a literal and its negation");
    require(((t.pos | t.neg) & ~all) == 0, "term mentions a variable beyond the arity");
  }
}

Dnf Dnf::from_literals(int variable_count, const std::vector<std::vector<int>>& terms) {
  std::vector<Term> out;
  for (const auto& lits : terms) {
    Term t;
    for (int lit : lits) {
      require(lit != 0 && std::abs(lit) <= variable_count, "literal out of range");
      const std::uint64_t bit = std::uint64_t{1} << (std::abs(lit) - 1);
      (lit > 0 ? t.pos : t.neg) |= bit;
    }
    out.push_back(t);
  }
  return Dnf(variable_count, std::move(out));
}

int Dnf::width() const {
  int w = 0;
  for (const auto& t : terms_) w = std::max(w, t.width());
  return w;
}

bool Dnf::monotone() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.neg == 0; });
}

std::optional<std::vector<int>> Dnf::unate_orientation() const {
  std::uint64_t pos = 0, neg = 0;
  for (const auto& t : terms_) {
    pos |= t.pos;
    neg |= t.neg;
  }
  if (pos & neg) return std::nullopt;
  std::vector<int> sign(n_, 0);
  for (int i = 0; i < n_; ++i) {
    if ((pos >> i) & 1) sign[i] = 1;
    if ((neg >> i) & 1) sign[i] = -1;
  }
  return sign;
}

bool Dnf::evaluate(std::uint64_t z) const {
  return std::any_of(terms_.begin(), terms_.end(), [z](const Term& t) { return t.satisfied_by(z); });
}

TruthTable Dnf::to_table() const {
  return core::tabulate([this](std::uint64_t z) { return evaluate(z); }, n_);
}

Dnf monotone_dnf(const TruthTable& g) {
  require(core::is_monotone(g), "function is not monotone");
  std::vector<Term> terms;
  const int n = g.arity();
  for (std::uint64_t z = 0; z < g.size(); ++z) {
    if (!g[z]) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i) {
      if (((z >> i) & 1) && g[z ^ (std::uint64_t{1} << i)]) minimal = false;
    }
    if (minimal) terms.push_back({z, 0});
  }
  return Dnf(n, std::move(terms));
}

Dnf canonical_dnf(const TruthTable& g) {
  std::vector<Term> terms;
  const std::uint64_t all = g.size() - 1;
  for (std::uint64_t z = 0; z < g.size(); ++z) {
    if (g[z]) terms.push_back({z, all & ~z});
  }
  return Dnf(g.arity(), std::move(terms));
}

std::uint64_t binomial_prefix(int n, int k) {
  std::uint64_t total = 0, c = 1;
  for (int i = 0; i <= std::min(n, k); ++i) {
    total += c;
    c = c * (n - i) / (i + 1);
  }
  return total;
}

// -- ProtocolBuilder --------------------------------------------------------

std::uint32_t ProtocolBuilder::add_alice(std::uint32_t length, Writer w) {
  alice_.push_back({alice_length_, length, std::move(w)});
  alice_length_ += length;
  return alice_.back().offset;
}

std::uint32_t ProtocolBuilder::add_bob(std::uint32_t length, Writer w) {
  bob_.push_back({bob_length_, length, std::move(w)});
  bob_length_ += length;
  return bob_.back().offset;
}

namespace {
ProtocolBuilder::Writer raw_writer(int n) {
  return [n](std::uint64_t x, std::uint8_t* out) {
    for (int i = 0; i < n; ++i) out[i] = (x >> i) & 1;
  };
}
}  // namespace

std::uint32_t ProtocolBuilder::alice_raw() {
  if (!alice_raw_) alice_raw_ = add_alice(n_, raw_writer(n_));
  return *alice_raw_;
}

std::uint32_t ProtocolBuilder::bob_raw() {
  if (!bob_raw_) bob_raw_ = add_bob(n_, raw_writer(n_));
  return *bob_raw_;
}

const std::vector<BooleanCircuit::Wire>& ProtocolBuilder::or_inputs() {
  if (z_or_.empty() && n_ > 0) {
    const std::uint32_t xa = alice_raw();
    const std::uint32_t yb = bob_raw();
    for (int i = 0; i < n_; ++i) {
      z_or_.push_back(carol_.add_or({carol_.alice(xa + i), carol_.bob(yb + i)}));
    }
  }
  return z_or_;
}

BsmProtocol ProtocolBuilder::build(BooleanCircuit::Wire output) && {
  carol_.set_output(output);
  const std::uint64_t count = std::uint64_t{1} << n_;
  auto fill = [count](const std::vector<Piece>& pieces, std::uint32_t length) {
    std::vector<std::uint8_t> table(count * length, 0);
    for (std::uint64_t x = 0; x < count; ++x) {
      std::uint8_t* row = table.data() + x * length;
      for (const auto& p : pieces) p.write(x, row + p.offset);
    }
    return table;
  };
  auto ta = fill(alice_, alice_length_);
  auto tb = fill(bob_, bob_length_);
  return BsmProtocol(n_, 2, alice_length_, std::move(ta), bob_length_, std::move(tb),
                     core::CarolEvaluator::circuit(std::move(carol_)));
}

// -- DNF protocol for the AND combiner ---------------------------------------

// A term over x and y: z_i = x_i and y_i splits cleanly, while each negated
// z_i = (not x_i) or (not y_i) doubles the term, one product per way of
// handing the negative literals to the two sides.
BsmProtocol dnf_protocol_and(const Dnf& g) {
  const int n = g.variable_count();
  ProtocolBuilder b(n);
  auto& c = b.carol();
  for (const auto& t : g.terms()) {
    if (t.pos == 0 && t.neg == 0) return std::move(b).build(c.constant(true));
  }
  std::vector<Term> alice_parts, bob_parts;
  for (const auto& t : g.terms()) {
    // Enumerate subsets A of N handed to Alice.
    std::uint64_t a = 0;
    do {
      alice_parts.push_back({t.pos, a});
      bob_parts.push_back({t.pos, t.neg & ~a});
      a = (a - t.neg) & t.neg;
    } while (a != 0);
  }
  const auto count = static_cast<std::uint32_t>(alice_parts.size());
  auto writer = [](std::vector<Term> parts) {
    return [parts = std::move(parts)](std::uint64_t x, std::uint8_t* out) {
      for (std::size_t k = 0; k < parts.size(); ++k) out[k] = parts[k].satisfied_by(x);
    };
  };
  b.add_alice(count, writer(alice_parts));
  b.add_bob(count, writer(bob_parts));
  std::vector<BooleanCircuit::Wire> products;
  for (std::uint32_t k = 0; k < count; ++k) {
    products.push_back(c.add_and({c.alice(k), c.bob(k)}));
  }
  return std::move(b).build(c.add_or(std::move(products)));
}

}  // namespace bsmwb::combine
