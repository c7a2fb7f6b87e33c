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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bsmwb/cli/cli.hpp"
#include "bsmwb/core/error.hpp"
#include "commands.hpp"

namespace bsmwb::cli {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("bsmwb-cli-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string str() const { return path_.string(); }
  fs::path operator/(const std::string& s) const { return path_ / s; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int rc = tools::run_cli(args, o, e);
  if (out) *out = o.str() + e.str();
  return rc;
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Rows, PassIsRecomputed) {
  ReportRow row;
  row.size = 10;
  row.size_bound = 12;
  EXPECT_TRUE(row.recompute_pass());
  row.size = 13;
  EXPECT_FALSE(row.recompute_pass());
  row.size = 10;
  row.mismatches = 1;
  EXPECT_FALSE(row.recompute_pass());
  row.mismatches = 0;
  row.reference = 1;  // never asserted
  EXPECT_TRUE(row.recompute_pass());
  row.note = "corrupt manifest";
  EXPECT_FALSE(row.recompute_pass());
}

TEST(Manifest, TextRoundTrip) {
  Manifest m;
  m.command = "combine alt";
  m.args = {"combine", "alt", "--fn", "g.tt"};
  m.seed = 9;
  m.cwd = "/tmp";
  m.inputs = {{"/tmp/g.tt", sha256_hex("x")}};
  m.outputs = {{"protocol.json", sha256_hex("y")}};
  ReportRow row;
  row.id = "combine-alt";
  row.n = 4;
  row.degree = 2;
  row.degree_bound = 3;
  m.rows = {row};
  const auto back = Manifest::from_text(m.to_text());
  EXPECT_EQ(back.to_text(), m.to_text());
  EXPECT_EQ(back.rows.at(0).n, 4);
  EXPECT_FALSE(back.rows.at(0).size.has_value());
  EXPECT_THROW(Manifest::from_text("{\"format\": \"other\"}"), Error);
}

TEST(Report, EmptyDirectoryGivesEmptyTable) {
  TempDir dir;
  const auto t = collect_report(dir.str());
  EXPECT_TRUE(t.rows.empty());
  EXPECT_EQ(t.to_csv().find('\n'), t.to_csv().size() - 1);  // header only
}

TEST(Cli, GenCombineVerifyAndReport) {
  TempDir dir;
  const std::string gen = (dir / "gen").string();
  ASSERT_EQ(run({"--seed", "3", "--out-dir", gen, "gen", "fn", "--n", "4"}), 0);
  const std::string fn = (dir / "gen" / "fn.tt").string();
  const std::string out = (dir / "alt").string();
  ASSERT_EQ(run({"--out-dir", out, "combine", "alt", "--fn", fn}), 0);
  EXPECT_TRUE(fs::exists(dir / "alt" / "combine-alt.manifest.json"));
  // gen records no rows; the combine run records one.
  const auto t = collect_report(dir.str());
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0].command, "combine alt");
  EXPECT_TRUE(t.rows[0].pass) << t.rows[0].note;
  EXPECT_EQ(t.rows[0].mismatches, 0u);
}

TEST(Cli, CorruptOutputIsFlagged) {
  TempDir dir;
  const std::string out = (dir / "code").string();
  ASSERT_EQ(run({"--out-dir", out, "code", "greedy", "--n", "5", "--r", "1"}), 0);
  std::ofstream(dir / "code" / "code.txt") << "tampered\n";
  const auto t = collect_report(dir.str());
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_FALSE(t.rows[0].pass);
  EXPECT_FALSE(t.rows[0].note.empty());
}

TEST(Cli, CorruptManifestIsFlagged) {
  TempDir dir;
  std::ofstream(dir / "x.manifest.json") << "{ not json";
  const auto t = collect_report(dir.str());
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_FALSE(t.rows[0].pass);
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  const std::string out = (dir / "o").string();
  EXPECT_EQ(run({"--out-dir", out, "combine", "alt", "--fn", (dir / "missing.tt").string()}), 4);
  EXPECT_EQ(run({"--out-dir", out, "combine", "alt"}), 1);
  EXPECT_EQ(run({"--out-dir", out, "frobnicate"}), 1);
  std::ofstream(dir / "bad.tt") << "arity 2\n10x1\n";
  EXPECT_EQ(run({"--out-dir", out, "combine", "alt", "--fn", (dir / "bad.tt").string()}), 4);
  // A truth table too large for the enumeration ceiling.
  ASSERT_EQ(run({"--out-dir", (dir / "g").string(), "gen", "fn", "--n", "8"}), 0);
  EXPECT_EQ(run({"--limit-bits", "10", "--out-dir", out, "combine", "alt", "--fn",
                 (dir / "g" / "fn.tt").string()}),
            3);
}

TEST(Cli, VerifyMismatchExitsTwo) {
  TempDir dir;
  ASSERT_EQ(run({"--seed", "1", "--out-dir", (dir / "a").string(), "gen", "fn", "--n", "3"}), 0);
  ASSERT_EQ(run({"--seed", "2", "--out-dir", (dir / "b").string(), "gen", "fn", "--n", "6"}), 0);
  ASSERT_EQ(run({"--out-dir", (dir / "p").string(), "combine", "alt", "--fn",
                 (dir / "a" / "fn.tt").string()}),
            0);
  std::string text;
  EXPECT_EQ(run({"--out-dir", (dir / "v").string(), "verify", "--proto", (dir / "p" / "protocol.json").string(),
                 "--fn", (dir / "b" / "fn.tt").string()},
                &text),
            2)
      << text;
  EXPECT_TRUE(fs::exists(dir / "v" / "verify.csv"));
}

TEST(Cli, RerunReproducesAndDetectsChanges) {
  TempDir dir;
  const std::string out = (dir / "gen").string();
  ASSERT_EQ(run({"--seed", "11", "--out-dir", out, "gen", "cnf", "--n", "4"}), 0);
  const std::string red = (dir / "red").string();
  ASSERT_EQ(run({"--seed", "5", "--out-dir", red, "reduce", "sat", "--in", (dir / "gen" / "phi.cnf").string()}), 0);
  const std::string manifest = (dir / "red" / "reduce-sat.manifest.json").string();
  std::string text;
  EXPECT_EQ(run({"rerun", manifest}, &text), 0) << text;
  EXPECT_NE(text.find("identical"), std::string::npos);

  // Tampering with the recorded output digest is caught as a difference.
  auto m = Manifest::from_text(slurp(manifest));
  m.outputs.at(0).sha256 = sha256_hex("something else");
  std::ofstream(manifest) << m.to_text();
  EXPECT_EQ(run({"rerun", manifest}, &text), 2);
  EXPECT_NE(text.find("differs"), std::string::npos);

  // A changed input is refused before anything runs.
  std::ofstream(dir / "gen" / "phi.cnf") << "p cnf 1 1\n1 0\n";
  EXPECT_NE(run({"rerun", manifest}), 0);
}

}  // namespace
}  // namespace bsmwb::cli
