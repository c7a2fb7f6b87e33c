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

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "bsmwb/cli/cli.hpp"
#include "bsmwb/core/error.hpp"
#include "bsmwb/core/protocol_io.hpp"

namespace bsmwb::cli {

using nlohmann::json;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorKind::kRejected, "sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

bool ReportRow::recompute_pass() const {
  if (!note.empty() || mismatches != 0) return false;
  if (size && size_bound && *size > *size_bound) return false;
  if (degree && degree_bound && *degree > *degree_bound) return false;
  return true;
}

namespace {

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j[key].is_null()) v = j[key].get<T>();
}

json digests_to_json(const std::vector<FileDigest>& ds) {
  json arr = json::array();
  for (const auto& d : ds) arr.push_back({{"path", d.path}, {"sha256", d.sha256}});
  return arr;
}

std::vector<FileDigest> digests_from_json(const json& j) {
  std::vector<FileDigest> out;
  for (const auto& d : j) out.push_back({d.at("path").get<std::string>(), d.at("sha256").get<std::string>()});
  return out;
}

}  // namespace

json row_to_json(const ReportRow& row) {
  json j{{"id", row.id}, {"command", row.command}, {"mismatches", row.mismatches}, {"pass", row.pass}};
  put(j, "n", row.n);
  put(j, "t", row.t);
  put(j, "r", row.r);
  put(j, "m", row.m);
  put(j, "size", row.size);
  put(j, "size_bound", row.size_bound);
  put(j, "degree", row.degree);
  put(j, "degree_bound", row.degree_bound);
  put(j, "reference", row.reference);
  if (!row.reference_formula.empty()) j["reference_formula"] = row.reference_formula;
  if (!row.note.empty()) j["note"] = row.note;
  return j;
}

ReportRow row_from_json(const json& j) {
  ReportRow row;
  row.id = j.at("id").get<std::string>();
  row.command = j.at("command").get<std::string>();
  row.mismatches = j.at("mismatches").get<std::uint64_t>();
  row.pass = j.at("pass").get<bool>();
  get(j, "n", row.n);
  get(j, "t", row.t);
  get(j, "r", row.r);
  get(j, "m", row.m);
  get(j, "size", row.size);
  get(j, "size_bound", row.size_bound);
  get(j, "degree", row.degree);
  get(j, "degree_bound", row.degree_bound);
  get(j, "reference", row.reference);
  row.reference_formula = j.value("reference_formula", "");
  row.note = j.value("note", "");
  return row;
}

std::string Manifest::to_text() const {
  json rows_json = json::array();
  for (const auto& r : rows) rows_json.push_back(row_to_json(r));
  const json j{{"format", "bsmwb-manifest"},
               {"version", version},
               {"command", command},
               {"args", args},
               {"seed", seed},
               {"limit_bits", limit_bits},
               {"jobs", jobs},
               {"cwd", cwd},
               {"inputs", digests_to_json(inputs)},
               {"outputs", digests_to_json(outputs)},
               {"rows", rows_json},
               {"status", status}};
  return core::dump_canonical(j);
}

Manifest Manifest::from_text(const std::string& text) {
  const json j = core::parse_document(text, "manifest");
  try {
    if (j.at("format").get<std::string>() != "bsmwb-manifest") {
      fail(ErrorKind::kParse, "manifest: wrong format tag");
    }
    Manifest m;
    m.version = j.at("version").get<std::string>();
    m.command = j.at("command").get<std::string>();
    m.args = j.at("args").get<std::vector<std::string>>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.limit_bits = j.at("limit_bits").get<int>();
    m.jobs = j.at("jobs").get<int>();
    m.cwd = j.at("cwd").get<std::string>();
    m.inputs = digests_from_json(j.at("inputs"));
    m.outputs = digests_from_json(j.at("outputs"));
    for (const auto& r : j.at("rows")) m.rows.push_back(row_from_json(r));
    m.status = j.at("status").get<std::string>();
    return m;
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("manifest: ") + e.what());
  }
}

}  // namespace bsmwb::cli
