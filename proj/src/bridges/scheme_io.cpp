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

#include "bsmwb/bridges/bridges.hpp"
#include "bsmwb/core/error.hpp"

namespace bsmwb::bridges {

using core::Json;

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorKind::kParse, std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    fail(ErrorKind::kParse, std::string("field '") + key + "' has the wrong type");
  }
}

void expect_format(const Json& j, const char* format) {
  if (get<std::string>(j, "format") != format) {
    fail(ErrorKind::kParse, std::string("not a ") + format + " document");
  }
  if (get<int>(j, "version") != 1) fail(ErrorKind::kParse, "unsupported schema version");
}

}  // namespace

Json ih_scheme_to_json(const IhScheme& s) {
  return Json{{"format", "bsmwb-ih-scheme"},
              {"version", 1},
              {"arity", s.n},
              {"randomness_count", s.randomness_count},
              {"alphabet", s.modulus},
              {"query_bits_a", s.query_bits_a},
              {"query_bits_b", s.query_bits_b},
              {"queries_a", s.query_a},
              {"queries_b", s.query_b},
              {"oracle_a", core::message_table_to_json(s.answer_length_a, s.oracle_a)},
              {"oracle_b", core::message_table_to_json(s.answer_length_b, s.oracle_b)},
              {"combine", core::carol_to_json(s.combine)},
              {"target", s.target.to_hex()}};
}

IhScheme ih_scheme_from_json(const Json& j) {
  expect_format(j, "bsmwb-ih-scheme");
  IhScheme s;
  s.n = get<int>(j, "arity");
  s.randomness_count = get<std::uint64_t>(j, "randomness_count");
  s.modulus = get<std::uint32_t>(j, "alphabet");
  s.query_bits_a = get<int>(j, "query_bits_a");
  s.query_bits_b = get<int>(j, "query_bits_b");
  if (s.n < 0 || s.n > 20 || s.query_bits_a < 0 || s.query_bits_a > 24 || s.query_bits_b < 0 ||
      s.query_bits_b > 24) {
    fail(ErrorKind::kParse, "scheme dimensions out of range");
  }
  s.query_a = get<std::vector<std::uint64_t>>(j, "queries_a");
  s.query_b = get<std::vector<std::uint64_t>>(j, "queries_b");
  s.oracle_a = core::message_table_from_json(j.at("oracle_a"), std::uint64_t{1} << s.query_bits_a,
                                             s.answer_length_a);
  s.oracle_b = core::message_table_from_json(j.at("oracle_b"), std::uint64_t{1} << s.query_bits_b,
                                             s.answer_length_b);
  s.combine = core::carol_from_json(j.at("combine"));
  try {
    s.target = TruthTable::from_hex(s.n, get<std::string>(j, "target"));
    s.check_shape();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse) throw;
    fail(ErrorKind::kParse, std::string("invalid scheme: ") + e.what());
  }
  return s;
}

Json pir_scheme_to_json(const PirScheme& p) {
  return Json{{"format", "bsmwb-pir-scheme"},
              {"version", 1},
              {"code", p.code.name},
              {"message_bits", p.code.message_bits},
              {"randomness_count", p.code.randomness_count},
              {"queries_a", p.query_a},
              {"queries_b", p.query_b}};
}

PirScheme pir_scheme_from_json(const Json& j) {
  expect_format(j, "bsmwb-pir-scheme");
  auto pir = smooth_ldc_to_pir(
      smooth_code_by_name(get<std::string>(j, "code"), get<int>(j, "message_bits")));
  if (get<std::vector<std::uint64_t>>(j, "queries_a") != pir.query_a ||
      get<std::vector<std::uint64_t>>(j, "queries_b") != pir.query_b) {
    fail(ErrorKind::kParse, "stored queries disagree with the named code");
  }
  return pir;
}

}  // namespace bsmwb::bridges
