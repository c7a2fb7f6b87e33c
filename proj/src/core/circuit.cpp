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

#include "bsmwb/core/circuit.hpp"

#include <algorithm>

#include "bsmwb/core/error.hpp"

namespace bsmwb::core {

BooleanCircuit::Wire BooleanCircuit::push(Gate g) {
  for (Wire w : g.inputs) require(w < gates_.size(), "gate references a later wire");
  gates_.push_back(std::move(g));
  return static_cast<Wire>(gates_.size() - 1);
}

BooleanCircuit::Wire BooleanCircuit::alice(std::uint32_t index) {
  auto it = alice_nodes_.find(index);
  if (it != alice_nodes_.end()) return it->second;
  Wire w = push({GateOp::kAliceInput, index, {}});
  alice_nodes_.emplace(index, w);
  return w;
}

BooleanCircuit::Wire BooleanCircuit::bob(std::uint32_t index) {
  auto it = bob_nodes_.find(index);
  if (it != bob_nodes_.end()) return it->second;
  Wire w = push({GateOp::kBobInput, index, {}});
  bob_nodes_.emplace(index, w);
  return w;
}

BooleanCircuit::Wire BooleanCircuit::constant(bool value) {
  Wire& slot = const_nodes_[value ? 1 : 0];
  if (slot == UINT32_MAX) slot = push({GateOp::kConst, value ? 1u : 0u, {}});
  return slot;
}

BooleanCircuit::Wire BooleanCircuit::add_not(Wire a) { return push({GateOp::kNot, 0, {a}}); }

BooleanCircuit::Wire BooleanCircuit::gated(GateOp op, std::vector<Wire> inputs) {
  return push({op, 0, std::move(inputs)});
}

BooleanCircuit::Wire BooleanCircuit::add_and(std::vector<Wire> inputs) {
  if (inputs.size() == 1) return inputs[0];
  if (inputs.empty()) return constant(true);
  return gated(GateOp::kAnd, std::move(inputs));
}

BooleanCircuit::Wire BooleanCircuit::add_or(std::vector<Wire> inputs) {
  if (inputs.size() == 1) return inputs[0];
  if (inputs.empty()) return constant(false);
  return gated(GateOp::kOr, std::move(inputs));
}

BooleanCircuit::Wire BooleanCircuit::add_xor(std::vector<Wire> inputs) {
  if (inputs.size() == 1) return inputs[0];
  if (inputs.empty()) return constant(false);
  return gated(GateOp::kXor, std::move(inputs));
}

void BooleanCircuit::set_output(Wire w) {
  require(w < gates_.size(), "output wire out of range");
  output_ = w;
}

BooleanCircuit::Wire BooleanCircuit::embed(const BooleanCircuit& other,
                                           std::uint32_t alice_offset,
                                           std::uint32_t bob_offset) {
  require(other.output_ != UINT32_MAX, "embedded circuit has no output");
  std::vector<Wire> map(other.gates_.size());
  for (std::size_t i = 0; i < other.gates_.size(); ++i) {
    const Gate& g = other.gates_[i];
    switch (g.op) {
      case GateOp::kAliceInput:
        map[i] = alice(g.param + alice_offset);
        break;
      case GateOp::kBobInput:
        map[i] = bob(g.param + bob_offset);
        break;
      case GateOp::kConst:
        map[i] = constant(g.param != 0);
        break;
      default: {
        std::vector<Wire> in;
        in.reserve(g.inputs.size());
        for (Wire w : g.inputs) in.push_back(map[w]);
        map[i] = push({g.op, 0, std::move(in)});
      }
    }
  }
  return map[other.output_];
}

std::uint64_t BooleanCircuit::gate_count() const {
  return static_cast<std::uint64_t>(std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) {
    return g.op == GateOp::kNot || g.op == GateOp::kAnd || g.op == GateOp::kOr ||
           g.op == GateOp::kXor;
  }));
}

std::uint64_t BooleanCircuit::depth() const {
  std::vector<std::uint64_t> d(gates_.size(), 0);
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    for (Wire w : gates_[i].inputs) d[i] = std::max(d[i], d[w] + 1);
  }
  return output_ == UINT32_MAX ? 0 : d[output_];
}

std::uint32_t BooleanCircuit::alice_width() const {
  return alice_nodes_.empty() ? 0 : alice_nodes_.rbegin()->first + 1;
}

std::uint32_t BooleanCircuit::bob_width() const {
  return bob_nodes_.empty() ? 0 : bob_nodes_.rbegin()->first + 1;
}

bool BooleanCircuit::evaluate(std::span<const std::uint8_t> a,
                              std::span<const std::uint8_t> b) const {
  std::vector<std::uint64_t> aw(a.size()), bw(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) aw[i] = a[i] ? ~0ULL : 0;
  for (std::size_t i = 0; i < b.size(); ++i) bw[i] = b[i] ? ~0ULL : 0;
  return (evaluate_sliced(aw, bw) & 1) != 0;
}

std::uint64_t BooleanCircuit::evaluate_sliced(std::span<const std::uint64_t> alice_words,
                                              std::span<const std::uint64_t> bob_words) const {
  require(output_ != UINT32_MAX, "circuit has no output");
  std::vector<std::uint64_t> v(gates_.size());
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    switch (g.op) {
      case GateOp::kAliceInput:
        if (g.param >= alice_words.size()) {
          fail(ErrorKind::kMalformed, "circuit reads Alice symbol " + std::to_string(g.param) +
                                          " beyond message length");
        }
        v[i] = alice_words[g.param];
        break;
      case GateOp::kBobInput:
        if (g.param >= bob_words.size()) {
          fail(ErrorKind::kMalformed, "circuit reads Bob symbol " + std::to_string(g.param) +
                                          " beyond message length");
        }
        v[i] = bob_words[g.param];
        break;
      case GateOp::kConst:
        v[i] = g.param ? ~0ULL : 0;
        break;
      case GateOp::kNot:
        v[i] = ~v[g.inputs[0]];
        break;
      case GateOp::kAnd: {
        std::uint64_t acc = ~0ULL;
        for (Wire w : g.inputs) acc &= v[w];
        v[i] = acc;
        break;
      }
      case GateOp::kOr: {
        std::uint64_t acc = 0;
        for (Wire w : g.inputs) acc |= v[w];
        v[i] = acc;
        break;
      }
      case GateOp::kXor: {
        std::uint64_t acc = 0;
        for (Wire w : g.inputs) acc ^= v[w];
        v[i] = acc;
        break;
      }
    }
  }
  return v[output_];
}

BooleanCircuit BooleanCircuit::from_gates(std::vector<Gate> gates, Wire output) {
  BooleanCircuit c;
  for (auto& g : gates) {
    switch (g.op) {
      case GateOp::kAliceInput:
        require(!c.alice_nodes_.count(g.param), "duplicate Alice input node");
        c.alice_nodes_.emplace(g.param, c.push(std::move(g)));
        break;
      case GateOp::kBobInput:
        require(!c.bob_nodes_.count(g.param), "duplicate Bob input node");
        c.bob_nodes_.emplace(g.param, c.push(std::move(g)));
        break;
      case GateOp::kConst:
        require(g.param <= 1, "constant gate must be 0 or 1");
        c.push(std::move(g));
        break;
      case GateOp::kNot:
        require(g.inputs.size() == 1, "NOT gate takes one input");
        c.push(std::move(g));
        break;
      default:
        c.push(std::move(g));
    }
  }
  c.set_output(output);
  return c;
}

std::string gate_op_name(GateOp op) {
  switch (op) {
    case GateOp::kAliceInput:
      return "alice";
    case GateOp::kBobInput:
      return "bob";
    case GateOp::kConst:
      return "const";
    case GateOp::kNot:
      return "not";
    case GateOp::kAnd:
      return "and";
    case GateOp::kOr:
      return "or";
    case GateOp::kXor:
      return "xor";
  }
  return "?";
}

GateOp gate_op_from_name(const std::string& name) {
  static const std::pair<const char*, GateOp> kOps[] = {
      {"alice", GateOp::kAliceInput}, {"bob", GateOp::kBobInput}, {"const", GateOp::kConst},
      {"not", GateOp::kNot},          {"and", GateOp::kAnd},      {"or", GateOp::kOr},
      {"xor", GateOp::kXor}};
  for (const auto& [n, op] : kOps) {
    if (name == n) return op;
  }
  fail(ErrorKind::kParse, "unknown gate kind '" + name + "'");
}

}  // namespace bsmwb::core
