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
#include <map>
#include <sstream>

#include "bsmwb/core/error.hpp"
#include "bsmwb/matmul/matmul.hpp"

namespace bsmwb::matmul {

namespace {

bool only_variables(const RationalPoly& p, bool (*side)(const std::string&)) {
  for (const auto& [m, q] : p.terms()) {
    if (!std::all_of(m.begin(), m.end(), side)) return false;
  }
  return true;
}

}  // namespace

ArithCircuit::Wire ArithCircuit::push(ArithGate g) {
  for (auto in : g.inputs) require(in < gates_.size(), "gate input refers to a later wire");
  gates_.push_back(std::move(g));
  return static_cast<Wire>(gates_.size() - 1);
}

ArithCircuit::Wire ArithCircuit::alice(const std::string& name, RationalPoly binding) {
  require(only_variables(binding, is_x_variable), "Alice's binding may only use X variables");
  return push({ArithOp::kAlice, name, {}, 0, std::move(binding)});
}

ArithCircuit::Wire ArithCircuit::bob(const std::string& name, RationalPoly binding) {
  require(only_variables(binding, is_y_variable), "Bob's binding may only use Y variables");
  return push({ArithOp::kBob, name, {}, 0, std::move(binding)});
}

ArithCircuit::Wire ArithCircuit::constant(const Rational& q) {
  return push({ArithOp::kConst, "", {}, q, {}});
}

ArithCircuit::Wire ArithCircuit::add(std::vector<Wire> inputs, const std::string& name) {
  require(inputs.size() >= 2, "add needs at least two operands");
  return push({ArithOp::kAdd, name, std::move(inputs), 0, {}});
}

ArithCircuit::Wire ArithCircuit::mul(Wire a, Wire b, const std::string& name) {
  return push({ArithOp::kMul, name, {a, b}, 0, {}});
}

ArithCircuit::Wire ArithCircuit::scale(const Rational& q, Wire a, const std::string& name) {
  return push({ArithOp::kScale, name, {a}, q, {}});
}

void ArithCircuit::add_output(const std::string& name, Wire w) {
  require(w < gates_.size(), "output wire out of range");
  outputs_.emplace_back(name, w);
}

std::uint64_t ArithCircuit::multiplication_count() const {
  return static_cast<std::uint64_t>(std::count_if(
      gates_.begin(), gates_.end(), [](const ArithGate& g) { return g.op == ArithOp::kMul; }));
}

ArithCircuit ArithCircuit::parse(const std::string& text) {
  ArithCircuit c;
  std::map<std::string, Wire> names;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    auto bad = [&](const std::string& why) { fail(ErrorKind::kParse, where + why); };
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    auto define = [&](const std::string& name, Wire w) {
      if (!names.emplace(name, w).second) bad("wire '" + name + "' defined twice");
    };
    auto operand = [&](const std::string& t) -> Wire {
      if (t.size() > 3 && t.rfind("c(", 0) == 0 && t.back() == ')') {
        try {
          return c.constant(parse_rational(t.substr(2, t.size() - 3)));
        } catch (const Error& e) {
          bad(e.what());
        }
      }
      auto it = names.find(t);
      if (it == names.end()) bad("undefined or cyclic reference '" + t + "'");
      return it->second;
    };

    if (tok[0] == "alice" || tok[0] == "bob") {
      const bool is_alice = tok[0] == "alice";
      if (tok.size() < 2) bad("missing wire name");
      RationalPoly binding;
      if (tok.size() == 2) {
        if (!(is_alice ? is_x_variable(tok[1]) : is_y_variable(tok[1]))) {
          bad("unbound leaf '" + tok[1] + "' must be named after a " + (is_alice ? "X" : "Y") +
              " variable");
        }
        binding = RationalPoly::variable(tok[1]);
      } else {
        if (tok[2] != ":=") bad("expected ':=' after the leaf name");
        std::string poly;
        for (std::size_t k = 3; k < tok.size(); ++k) poly += tok[k];
        try {
          binding = RationalPoly::parse(poly);
        } catch (const Error& e) {
          bad(e.what());
        }
      }
      try {
        define(tok[1], is_alice ? c.alice(tok[1], binding) : c.bob(tok[1], binding));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kParse) throw;
        bad(e.what());
      }
    } else if (tok[0] == "out") {
      if (tok.size() != 3) bad("expected 'out NAME wire'");
      c.add_output(tok[1], operand(tok[2]));
    } else if (tok.size() >= 3 && tok[1] == "=") {
      const std::string& op = tok[2];
      std::vector<Wire> args;
      if (op == "const") {
        if (tok.size() != 4) bad("expected 'NAME = const c(q)'");
        define(tok[0], operand(tok[3]));
        continue;
      }
      if (op == "smul") {
        if (tok.size() != 5 || tok[3].rfind("c(", 0) != 0 || tok[3].back() != ')') {
          bad("expected 'NAME = smul c(q) wire'");
        }
        Rational q;
        try {
          q = parse_rational(tok[3].substr(2, tok[3].size() - 3));
        } catch (const Error& e) {
          bad(e.what());
        }
        define(tok[0], c.scale(q, operand(tok[4]), tok[0]));
        continue;
      }
      for (std::size_t k = 3; k < tok.size(); ++k) args.push_back(operand(tok[k]));
      if (op == "mul") {
        if (args.size() != 2) bad("mul takes exactly two operands");
        define(tok[0], c.mul(args[0], args[1], tok[0]));
      } else if (op == "add") {
        if (args.size() < 2) bad("add takes at least two operands");
        define(tok[0], c.add(std::move(args), tok[0]));
      } else {
        bad("unknown operation '" + op + "'");
      }
    } else {
      bad("unrecognized line");
    }
  }
  return c;
}

std::string ArithCircuit::to_text() const {
  std::ostringstream os;
  std::vector<std::string> label(gates_.size());
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const auto& g = gates_[i];
    label[i] = g.name.empty() ? "w" + std::to_string(i) : g.name;
    switch (g.op) {
      case ArithOp::kAlice:
      case ArithOp::kBob:
        os << (g.op == ArithOp::kAlice ? "alice " : "bob ") << label[i];
        if (!(g.binding == RationalPoly::variable(g.name))) os << " := " << g.binding.to_string();
        break;
      case ArithOp::kConst:
        os << label[i] << " = const c(" << rational_to_string(g.value) << ")";
        break;
      case ArithOp::kAdd:
        os << label[i] << " = add";
        for (auto in : g.inputs) os << ' ' << label[in];
        break;
      case ArithOp::kMul:
        os << label[i] << " = mul " << label[g.inputs[0]] << ' ' << label[g.inputs[1]];
        break;
      case ArithOp::kScale:
        os << label[i] << " = smul c(" << rational_to_string(g.value) << ") " << label[g.inputs[0]];
        break;
    }
    os << '\n';
  }
  for (const auto& [name, w] : outputs_) os << "out " << name << ' ' << label[w] << '\n';
  return os.str();
}

std::vector<RationalPoly> expand_outputs(const ArithCircuit& c) {
  std::vector<RationalPoly> value(c.gates().size());
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const auto& g = c.gates()[i];
    switch (g.op) {
      case ArithOp::kAlice:
      case ArithOp::kBob:
        value[i] = g.binding;
        break;
      case ArithOp::kConst:
        value[i] = RationalPoly::constant(g.value);
        break;
      case ArithOp::kAdd:
        for (auto in : g.inputs) value[i] = value[i] + value[in];
        break;
      case ArithOp::kMul:
        value[i] = value[g.inputs[0]] * value[g.inputs[1]];
        break;
      case ArithOp::kScale:
        value[i] = value[g.inputs[0]].scaled(g.value);
        break;
    }
  }
  std::vector<RationalPoly> out;
  for (const auto& [name, w] : c.outputs()) out.push_back(value[w]);
  return out;
}

ArithCircuit random_circuit(core::Rng& rng, int gates) {
  auto small = [&]() {
    const auto num = static_cast<long>(rng.uniform(7)) - 3;
    const auto den = static_cast<long>(rng.uniform(3)) + 1;
    return Rational(num, den);
  };
  auto entry = [&](char m) {
    return std::string(1, m) + std::to_string(rng.uniform(2) + 1) + std::to_string(rng.uniform(2) + 1);
  };
  auto leaf_poly = [&](char m) {
    RationalPoly p = RationalPoly::variable(entry(m));
    if (rng.coin()) {
      const auto v = entry(m);
      p = p + RationalPoly::variable(v) * RationalPoly::variable(v);  // nonlinear piece
    }
    if (rng.coin()) p = p + RationalPoly::constant(small());
    if (rng.coin()) p = p + RationalPoly::variable(entry(m)).scaled(small());
    return p;
  };
  ArithCircuit c;
  std::vector<ArithCircuit::Wire> wires;
  for (int k = 0; k < 2; ++k) wires.push_back(c.alice("A" + std::to_string(k + 1), leaf_poly('X')));
  for (int k = 0; k < 2; ++k) wires.push_back(c.bob("B" + std::to_string(k + 1), leaf_poly('Y')));
  for (int g = 0; g < gates; ++g) {
    auto pick = [&]() { return wires[rng.uniform(wires.size())]; };
    const auto kind = rng.uniform(4);
    ArithCircuit::Wire w;
    if (kind == 0 || kind == 1) {
      w = c.mul(pick(), pick());
    } else if (kind == 2) {
      w = c.add({pick(), rng.coin() ? pick() : c.constant(small())});
    } else {
      w = c.scale(small(), pick());
    }
    wires.push_back(w);
  }
  c.add_output("Z", wires.back());
  c.add_output("W", wires[wires.size() - 2]);
  return c;
}

}  // namespace bsmwb::matmul
