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

#include "bsmwb/core/protocol_io.hpp"

#include <fstream>
#include <sstream>

#include "bsmwb/core/error.hpp"

namespace bsmwb::core {

std::string dump_canonical(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_document(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorKind::kParse, source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                ": malformed document");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kRejected, "cannot write '" + path + "'");
  out << contents;
  if (!out) fail(ErrorKind::kRejected, "write to '" + path + "' failed");
}

namespace {

std::string symbols_to_hex(std::span<const std::uint8_t> s) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(kDigits[v & 15]);
  return out;
}

void hex_to_symbols(const std::string& row, std::vector<std::uint8_t>& out) {
  for (char c : row) {
    if (c >= '0' && c <= '9') {
      out.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c >= 'a' && c <= 'f') {
      out.push_back(static_cast<std::uint8_t>(c - 'a' + 10));
    } else {
      fail(ErrorKind::kParse, std::string("bad symbol digit '") + c + "' in message row");
    }
  }
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorKind::kParse, std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    fail(ErrorKind::kParse, std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

Json message_table_to_json(std::uint32_t length, const std::vector<std::uint8_t>& table) {
  Json rows = Json::array();
  for (std::size_t off = 0; off < table.size(); off += std::max<std::uint32_t>(length, 1)) {
    if (length == 0) break;
    rows.push_back(symbols_to_hex({table.data() + off, length}));
  }
  return Json{{"length", length}, {"rows", rows}};
}

std::vector<std::uint8_t> message_table_from_json(const Json& j, std::uint64_t count,
                                                  std::uint32_t& length) {
  length = field<std::uint32_t>(j, "length");
  auto rows = field<std::vector<std::string>>(j, "rows");
  std::vector<std::uint8_t> out;
  if (length == 0) {
    if (!rows.empty()) fail(ErrorKind::kParse, "zero-length messages must have no rows");
    return out;
  }
  if (rows.size() != count) {
    fail(ErrorKind::kParse, "message table has " + std::to_string(rows.size()) +
                                " rows, expected " + std::to_string(count));
  }
  for (const auto& r : rows) {
    if (r.size() != length) fail(ErrorKind::kParse, "message row length differs from header");
    hex_to_symbols(r, out);
  }
  return out;
}

Json circuit_to_json(const BooleanCircuit& c) {
  Json gates = Json::array();
  for (const auto& g : c.gates()) {
    Json row = Json::array({gate_op_name(g.op)});
    if (g.op == GateOp::kAliceInput || g.op == GateOp::kBobInput || g.op == GateOp::kConst) {
      row.push_back(g.param);
    } else {
      row.push_back(g.inputs);
    }
    gates.push_back(std::move(row));
  }
  return Json{{"gates", gates}, {"output", c.output()}};
}

BooleanCircuit circuit_from_json(const Json& j) {
  std::vector<Gate> gates;
  const Json& arr = j.at("gates");
  if (!arr.is_array()) fail(ErrorKind::kParse, "circuit gates must be an array");
  for (const auto& row : arr) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_string()) {
      fail(ErrorKind::kParse, "circuit gate must be [kind, operand]");
    }
    Gate g{gate_op_from_name(row[0].get<std::string>()), 0, {}};
    try {
      if (g.op == GateOp::kAliceInput || g.op == GateOp::kBobInput || g.op == GateOp::kConst) {
        g.param = row[1].get<std::uint32_t>();
      } else {
        g.inputs = row[1].get<std::vector<std::uint32_t>>();
      }
    } catch (const Json::exception&) {
      fail(ErrorKind::kParse, "circuit gate operand has the wrong type");
    }
    gates.push_back(std::move(g));
  }
  try {
    return BooleanCircuit::from_gates(std::move(gates), field<std::uint32_t>(j, "output"));
  } catch (const Error& e) {
    fail(ErrorKind::kParse, std::string("invalid circuit: ") + e.what());
  }
}

Json cost_to_json(const CarolCost& cost) {
  Json j{{"gate_count", cost.gate_count}};
  j["degree"] = cost.degree ? Json(*cost.degree) : Json(nullptr);
  j["depth"] = cost.depth ? Json(*cost.depth) : Json(nullptr);
  j["multiplication_gates"] =
      cost.multiplication_gates ? Json(*cost.multiplication_gates) : Json(nullptr);
  return j;
}

CarolCost cost_from_json(const Json& j) {
  CarolCost c;
  c.gate_count = field<std::uint64_t>(j, "gate_count");
  auto opt = [&](const char* key) -> std::optional<std::uint64_t> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return field<std::uint64_t>(j, key);
  };
  c.degree = opt("degree");
  c.depth = opt("depth");
  c.multiplication_gates = opt("multiplication_gates");
  return c;
}

Json carol_to_json(const CarolEvaluator& carol) {
  Json j{{"kind", carol_kind_name(carol.kind())},
         {"declared_cost", cost_to_json(carol.declared_cost())},
         {"alice_offset", carol.alice_offset()},
         {"bob_offset", carol.bob_offset()}};
  switch (carol.kind()) {
    case CarolKind::kCircuit:
      j["circuit"] = circuit_to_json(std::get<BooleanCircuit>(carol.payload()));
      break;
    case CarolKind::kPolynomial: {
      const auto& p = std::get<PolynomialCarol>(carol.payload());
      j["polynomial"] = Json{{"modulus", p.poly.modulus()},
                             {"variables", p.poly.variable_count()},
                             {"monomials", p.poly.to_strings()}};
      j["predicate"] = p.predicate;
      break;
    }
    case CarolKind::kLookup: {
      const auto& t = std::get<LookupCarol>(carol.payload()).table;
      j["table_size"] = t.size();
      j["table"] = symbols_to_hex(t);
      break;
    }
    case CarolKind::kOpaque:
      j["name"] = std::get<OpaqueCarol>(carol.payload()).name;
      break;
  }
  return j;
}

CarolEvaluator carol_from_json(const Json& j) {
  const auto kind = field<std::string>(j, "kind");
  const CarolCost cost = cost_from_json(j.at("declared_cost"));
  CarolEvaluator::Payload payload = LookupCarol{};
  if (kind == carol_kind_name(CarolKind::kCircuit)) {
    payload = circuit_from_json(j.at("circuit"));
  } else if (kind == carol_kind_name(CarolKind::kPolynomial)) {
    const Json& pj = j.at("polynomial");
    auto poly = ModularPolynomial::from_strings(field<std::uint32_t>(pj, "modulus"),
                                                field<std::uint32_t>(pj, "variables"),
                                                field<std::vector<std::string>>(pj, "monomials"));
    payload = PolynomialCarol{std::move(poly), field<std::vector<std::uint8_t>>(j, "predicate")};
  } else if (kind == carol_kind_name(CarolKind::kLookup)) {
    std::vector<std::uint8_t> t;
    hex_to_symbols(field<std::string>(j, "table"), t);
    if (t.size() != field<std::uint64_t>(j, "table_size")) {
      fail(ErrorKind::kParse, "lookup table length differs from table_size");
    }
    payload = LookupCarol{std::move(t)};
  } else if (kind == carol_kind_name(CarolKind::kOpaque)) {
    fail(ErrorKind::kParse, "opaque Carol '" + field<std::string>(j, "name") +
                                "' has no serialized payload and cannot be loaded");
  } else {
    fail(ErrorKind::kParse, "unknown Carol kind '" + kind + "'");
  }
  try {
    return CarolEvaluator(std::move(payload), cost)
        .with_offsets(field<std::uint32_t>(j, "alice_offset"), field<std::uint32_t>(j, "bob_offset"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse) throw;
    fail(ErrorKind::kParse, std::string("invalid Carol: ") + e.what());
  }
}

Json protocol_to_json(const BsmProtocol& p) {
  return Json{{"format", "bsmwb-protocol"},
              {"version", kProtocolSchemaVersion},
              {"arity", p.input_arity()},
              {"alphabet", p.modulus()},
              {"alice", message_table_to_json(p.alice_length(), p.alice_table())},
              {"bob", message_table_to_json(p.bob_length(), p.bob_table())},
              {"carol", carol_to_json(p.carol())}};
}

BsmProtocol protocol_from_json(const Json& j) {
  if (field<std::string>(j, "format") != "bsmwb-protocol") {
    fail(ErrorKind::kParse, "not a protocol document");
  }
  if (field<int>(j, "version") != kProtocolSchemaVersion) {
    fail(ErrorKind::kParse, "unsupported protocol schema version");
  }
  const int n = field<int>(j, "arity");
  if (n < 0 || n > 30) fail(ErrorKind::kParse, "protocol arity out of range");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint32_t la = 0, lb = 0;
  auto ta = message_table_from_json(j.at("alice"), count, la);
  auto tb = message_table_from_json(j.at("bob"), count, lb);
  try {
    return BsmProtocol(n, field<std::uint32_t>(j, "alphabet"), la, std::move(ta), lb,
                       std::move(tb), carol_from_json(j.at("carol")));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse) throw;
    fail(ErrorKind::kParse, std::string("invalid protocol: ") + e.what());
  }
}

Json report_to_json(const VerificationReport& report) {
  Json rows = Json::array();
  for (const auto& m : report.mismatches) {
    rows.push_back(Json{{"x", m.x}, {"y", m.y}, {"expected", int(m.expected)},
                        {"produced", int(m.produced)}});
  }
  return Json{{"pairs_checked", report.pairs_checked},
              {"mismatch_count", report.mismatches.size()},
              {"mismatches", rows},
              {"audited", report.audited}};
}

std::string truth_table_to_text(const TruthTable& t) {
  std::string hex = t.to_hex();
  std::string out = "arity " + std::to_string(t.arity()) + "\n";
  for (std::size_t i = 0; i < hex.size(); i += 64) out += hex.substr(i, 64) + "\n";
  return out;
}

TruthTable truth_table_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int arity = -1;
  std::string hex;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (arity < 0) {
      std::istringstream hs(line);
      std::string word;
      if (!(hs >> word >> arity) || word != "arity" || arity < 0 || arity > 30) {
        fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected 'arity N'");
      }
      continue;
    }
    hex += line;
  }
  if (arity < 0) fail(ErrorKind::kParse, "truth table file has no 'arity N' header");
  return TruthTable::from_hex(arity, hex);
}

}  // namespace bsmwb::core
