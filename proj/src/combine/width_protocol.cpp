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
#include <map>

#include "bsmwb/combine/combine.hpp"
#include "bsmwb/core/error.hpp"

namespace bsmwb::combine {

namespace {

using Parts = std::map<Term, std::vector<Term>>;

// Key side literals -> OR of the other side's parts.
struct Plan {
  Parts alice;  // keyed on x
  Parts bob;    // keyed on y
};

Plan make_plan(const Dnf& g) {
  Plan plan;
  for (const auto& t : g.terms()) {
    std::uint64_t t1 = 0;
    do {
      const std::uint64_t t2 = t.pos & ~t1;
      if (std::popcount(t1) <= std::popcount(t2)) {
        plan.alice[{t1, t.neg}].push_back({t2, t.neg});
      } else {
        plan.bob[{t2, t.neg}].push_back({t1, t.neg});
      }
      t1 = (t1 - t.pos) & t.pos;
    } while (t1 != 0);
  }
  for (auto* side : {&plan.alice, &plan.bob}) {
    for (auto& [key, parts] : *side) {
      std::sort(parts.begin(), parts.end());
      parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    }
  }
  return plan;
}

bool is_empty(const Term& t) { return t.pos == 0 && t.neg == 0; }

}  // namespace

BooleanCircuit::Wire attach_width_engine(ProtocolBuilder& builder, const Dnf& g,
                                         WidthPlanStats* stats) {
  require(g.variable_count() == builder.arity(), "DNF arity differs from the protocol arity");
  Plan plan = make_plan(g);

  // Each party's piece: its own nonempty keys, then aggregates for the
  // other party's keys.
  auto keys_of = [](const Parts& p) {
    std::vector<Term> out;
    for (const auto& [key, parts] : p) {
      if (!is_empty(key)) out.push_back(key);
    }
    return out;
  };
  auto aggregates_of = [](const Parts& p) {
    std::vector<std::vector<Term>> out;
    for (const auto& [key, parts] : p) out.push_back(parts);
    return out;
  };
  auto writer = [](std::vector<Term> keys, std::vector<std::vector<Term>> aggs) {
    return [keys = std::move(keys), aggs = std::move(aggs)](std::uint64_t x, std::uint8_t* out) {
      for (const auto& k : keys) *out++ = k.satisfied_by(x);
      for (const auto& parts : aggs) {
        *out++ = std::any_of(parts.begin(), parts.end(),
                             [x](const Term& t) { return t.satisfied_by(x); });
      }
    };
  };

  auto a_keys = keys_of(plan.alice);
  auto b_keys = keys_of(plan.bob);
  const auto a_len = static_cast<std::uint32_t>(a_keys.size() + plan.bob.size());
  const auto b_len = static_cast<std::uint32_t>(b_keys.size() + plan.alice.size());
  const std::uint32_t a_off =
      builder.add_alice(a_len, writer(a_keys, aggregates_of(plan.bob)));
  const std::uint32_t b_off =
      builder.add_bob(b_len, writer(b_keys, aggregates_of(plan.alice)));

  auto& c = builder.carol();
  std::vector<BooleanCircuit::Wire> disjuncts;
  std::uint64_t and_gates = 0;
  {
    std::uint32_t key_pos = a_off;
    std::uint32_t agg_pos = b_off + static_cast<std::uint32_t>(b_keys.size());
    for (const auto& [key, parts] : plan.alice) {
      auto agg = c.bob(agg_pos++);
      if (is_empty(key)) {
        disjuncts.push_back(agg);
      } else {
        disjuncts.push_back(c.add_and({c.alice(key_pos++), agg}));
        ++and_gates;
      }
    }
  }
  {
    std::uint32_t key_pos = b_off;
    std::uint32_t agg_pos = a_off + static_cast<std::uint32_t>(a_keys.size());
    for (const auto& [key, parts] : plan.bob) {
      auto agg = c.alice(agg_pos++);
      if (is_empty(key)) {
        disjuncts.push_back(agg);
      } else {
        disjuncts.push_back(c.add_and({c.bob(key_pos++), agg}));
        ++and_gates;
      }
    }
  }
  if (stats) *stats = {plan.alice.size(), plan.bob.size(), and_gates};
  return c.add_or(std::move(disjuncts));
}

BsmProtocol monotone_width_protocol_or(const Dnf& g, int w) {
  require(g.monotone(), "monotone-width protocol needs a monotone DNF");
  require(g.width() <= w, "DNF is wider than the declared width");
  ProtocolBuilder b(g.variable_count());
  auto out = attach_width_engine(b, g);
  return std::move(b).build(out);
}

}  // namespace bsmwb::combine
