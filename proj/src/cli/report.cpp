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
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "bsmwb/cli/cli.hpp"
#include "bsmwb/core/error.hpp"
#include "bsmwb/core/protocol_io.hpp"

namespace bsmwb::cli {

namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kColumns = {"id",     "command",      "n",         "t",
                                           "r",      "m",            "size",      "size_bound",
                                           "degree", "degree_bound", "reference", "ratio",
                                           "mismatches", "pass",     "note"};

std::string num(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream os;
  os << std::setprecision(6) << *v;
  return os.str();
}

std::string num(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

std::vector<std::string> cells(const ReportRow& r) {
  std::optional<double> ratio;
  if (r.size && r.reference && *r.reference != 0) ratio = *r.size / *r.reference;
  std::string ref = num(r.reference);
  if (!ref.empty() && !r.reference_formula.empty()) ref += " (" + r.reference_formula + ")";
  return {r.id,
          r.command,
          num(r.n),
          num(r.t),
          num(r.r),
          num(r.m),
          num(r.size),
          num(r.size_bound),
          num(r.degree),
          num(r.degree_bound),
          ref,
          num(ratio),
          std::to_string(r.mismatches),
          r.pass ? "pass" : "FAIL",
          r.note};
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string ReportTable::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < kColumns.size(); ++i) os << (i ? "," : "") << kColumns[i];
  os << '\n';
  for (const auto& r : rows) {
    const auto c = cells(r);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << csv_cell(c[i]);
    os << '\n';
  }
  return os.str();
}

std::string ReportTable::to_text() const {
  std::vector<std::vector<std::string>> grid{kColumns};
  for (const auto& r : rows) grid.push_back(cells(r));
  std::vector<std::size_t> width(kColumns.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream os;
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) text += "  ";
      text += line[i] + std::string(width[i] - line[i].size(), ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    os << text << '\n';
  }
  return os.str();
}

ReportTable collect_report(const std::string& dir) {
  if (!fs::is_directory(dir)) fail(ErrorKind::kRejected, "not a directory: " + dir);
  std::vector<fs::path> manifests;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.size() > std::string(kManifestSuffix).size() &&
        name.ends_with(kManifestSuffix)) {
      manifests.push_back(entry.path());
    }
  }
  std::sort(manifests.begin(), manifests.end());

  ReportTable table;
  for (const auto& path : manifests) {
    const std::string rel = fs::relative(path, dir).string();
    ReportRow flagged;
    flagged.id = rel;
    flagged.pass = false;
    try {
      const Manifest m = Manifest::from_text(core::read_file(path.string()));
      std::string bad;
      for (const auto& out : m.outputs) {
        const fs::path file = path.parent_path() / out.path;
        if (!fs::exists(file)) {
          bad = "missing output " + out.path;
        } else if (sha256_hex(core::read_file(file.string())) != out.sha256) {
          bad = "digest mismatch on " + out.path;
        }
        if (!bad.empty()) break;
      }
      if (!bad.empty()) {
        flagged.command = m.command;
        flagged.note = "corrupt manifest: " + bad;
        table.rows.push_back(flagged);
        continue;
      }
      for (std::size_t i = 0; i < m.rows.size(); ++i) {
        ReportRow row = m.rows[i];
        row.id = m.rows.size() == 1 ? rel : rel + "#" + std::to_string(i + 1);
        row.pass = row.recompute_pass();
        table.rows.push_back(row);
      }
    } catch (const std::exception& e) {
      flagged.note = std::string("corrupt manifest: ") + e.what();
      table.rows.push_back(flagged);
    }
  }
  return table;
}

}  // namespace bsmwb::cli
