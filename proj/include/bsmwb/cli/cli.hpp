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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace bsmwb::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kManifestSuffix = ".manifest.json";

std::string sha256_hex(const std::string& bytes);

// One measured row; pass is recomputable from the row itself:
// mismatches == 0, size <= size_bound and degree <= degree_bound where a
// bound is present. `reference` is a formula value that is recorded with
// its ratio but never asserted.
struct ReportRow {
  std::string id;
  std::string command;
  std::optional<std::int64_t> n, t, r, m;
  std::optional<double> size, size_bound;
  std::optional<double> degree, degree_bound;
  std::optional<double> reference;
  std::string reference_formula;
  std::uint64_t mismatches = 0;
  bool pass = true;
  std::string note;  // e.g. "corrupt manifest"

  bool recompute_pass() const;
};

nlohmann::json row_to_json(const ReportRow& row);
ReportRow row_from_json(const nlohmann::json& j);

struct FileDigest {
  std::string path;  // inputs: absolute; outputs: relative to the out-dir
  std::string sha256;
};

// Everything needed to re-execute a run: arguments after the global flags,
// the global flag values, the working directory for relative inputs, and the
// digests of what went in and came out.
struct Manifest {
  std::string version = kVersion;
  std::string command;  // e.g. "reduce sat"
  std::vector<std::string> args;
  std::uint64_t seed = 0;
  int limit_bits = 24;
  int jobs = 1;
  std::string cwd;
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;
  std::vector<ReportRow> rows;
  std::string status = "ok";  // "ok" or "mismatch"

  std::string to_text() const;
  static Manifest from_text(const std::string& text);
};

struct ReportTable {
  std::vector<ReportRow> rows;

  std::string to_csv() const;
  std::string to_text() const;  // aligned columns
};

// Reads every *.manifest.json below `dir` in path order. A manifest that does
// not parse or whose output digests no longer match yields a flagged row.
ReportTable collect_report(const std::string& dir);

}  // namespace bsmwb::cli
