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

enum class GateOp : std::uint8_t {
  kAliceInput,
  kBobInput,
  kConst,
  kNot,
  kAnd,
  kOr,
  kXor,
};

struct Gate {
  GateOp op;
  std::uint32_t param = 0;  // input index, or constant value
  std::vector<std::uint32_t> inputs;
};

// Unbounded fan-in Boolean circuit over Carol's two messages. Gates are kept
// in topological order: a gate may only reference earlier gates. Size counts
// NOT/AND/OR/XOR gates; input and constant nodes are free.
class BooleanCircuit {
 public:
  using Wire = std::uint32_t;

  Wire alice(std::uint32_t index);
  Wire bob(std::uint32_t index);
  Wire constant(bool value);
  Wire add_not(Wire a);
  Wire add_and(std::vector<Wire> inputs);
  Wire add_or(std::vector<Wire> inputs);
  Wire add_xor(std::vector<Wire> inputs);

  void set_output(Wire w);
  Wire output() const { return output_; }

  // Copies `other` into this circuit with its input indices shifted, and
  // returns the wire carrying its output.
  Wire embed(const BooleanCircuit& other, std::uint32_t alice_offset,
             std::uint32_t bob_offset);

  std::uint64_t gate_count() const;
  std::uint64_t depth() const;
  std::uint32_t alice_width() const;  // 1 + highest Alice index read
  std::uint32_t bob_width() const;

  bool evaluate(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) const;

  // 64 independent evaluations at once: bit t of alice_words[i] is symbol i
  // of lane t's Alice message.
  std::uint64_t evaluate_sliced(std::span<const std::uint64_t> alice_words,
                                std::span<const std::uint64_t> bob_words) const;

  const std::vector<Gate>& gates() const { return gates_; }

  // Rebuilds a circuit from a gate list, checking topological order.
  static BooleanCircuit from_gates(std::vector<Gate> gates, Wire output);

 private:
  Wire push(Gate g);
  Wire gated(GateOp op, std::vector<Wire> inputs);

  std::vector<Gate> gates_;
  std::map<std::uint32_t, Wire> alice_nodes_;
  std::map<std::uint32_t, Wire> bob_nodes_;
  Wire const_nodes_[2] = {UINT32_MAX, UINT32_MAX};
  Wire output_ = UINT32_MAX;
};

std::string gate_op_name(GateOp op);
GateOp gate_op_from_name(const std::string& name);

}  // namespace bsmwb::core
