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

// Acceptance runner: one PASS/FAIL line per criterion. With an argument it
// runs only that criterion; the exit code is nonzero if any run fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bsmwb/bridges/bridges.hpp"
#include "bsmwb/combine/combine.hpp"
#include "bsmwb/core/error.hpp"
#include "bsmwb/core/protocol_io.hpp"
#include "bsmwb/core/verify.hpp"
#include "bsmwb/dovetail/dovetail.hpp"
#include "bsmwb/matmul/matmul.hpp"
#include "bsmwb/polydeg/polydeg.hpp"
#include "bsmwb/splithide/deciders.hpp"
#include "bsmwb/splithide/privacy.hpp"
#include "bsmwb/splithide/reductions.hpp"
#include "commands.hpp"
#include "test_util.hpp"

namespace bsmwb {
namespace {

namespace fs = std::filesystem;
using core::Combiner;
using core::TruthTable;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few are echoed in the summary line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.size() < 4) first_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }

  Outcome outcome() const {
    std::ostringstream os;
    os << checks_ << " checks, " << failures_ << " failed";
    for (const auto& n : notes_) os << "; " << n;
    if (!first_.empty()) {
      os << "; first failures:";
      for (const auto& f : first_) os << " [" << f << "]";
    }
    return {failures_ == 0, os.str()};
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<std::string> first_;
  std::vector<std::string> notes_;
};

bool exact(const core::BsmProtocol& p, const TruthTable& target) {
  return core::verify_exhaustive(p, target).ok();
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

Outcome split_hide_equivalence() {
  using namespace splithide;
  Checker ck;
  const auto start = std::chrono::steady_clock::now();
  core::Rng rng(101);
  int sat = 0;
  for (int i = 0; i < 500; ++i) {
    const auto phi = testing::random_3cnf(rng, 4, 4 + i % 40);
    const auto out = reduce_sat(phi, rng.next());
    const bool truth = decide_sat(phi);
    sat += truth;
    ck.expect(truth == decide_sat(Cnf::conjoin(out.alice_part, out.bob_part)), "sat #" + std::to_string(i));
  }
  int col = 0;
  for (int i = 0; i < 200; ++i) {
    const auto g = testing::random_graph(rng, 5);
    const auto out = reduce_3col(g, rng.next());
    const bool truth = decide_3col(g);
    col += truth;
    ck.expect(truth == decide_3col(Graph::merge(out.alice_part, out.bob_part)), "3col #" + std::to_string(i));
  }
  int yes = 0;
  for (int i = 0; i < 512; ++i) {
    IntMultiset s;
    for (int k = 0; k < 3; ++k) s.elements.emplace_back((i >> (3 * k)) & 7);
    const auto out = reduce_partition(s, static_cast<std::uint64_t>(i) + 1);
    IntMultiset both = out.alice_part;
    for (const auto& v : out.bob_part.elements) both.elements.push_back(v);
    const bool truth = decide_partition(s);
    yes += truth;
    ck.expect(truth == decide_partition(both), "partition #" + std::to_string(i));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ck.expect(secs < 300, "runtime " + fixed(secs, 1) + "s");
  ck.note("satisfiable " + std::to_string(sat) + "/500, colorable " + std::to_string(col) +
          "/200, partitionable " + std::to_string(yes) + "/512, " + fixed(secs, 1) + "s");
  return ck.outcome();
}

Outcome split_hide_privacy() {
  using namespace splithide;
  Checker ck;
  core::Rng rng(202);
  PrivacyOptions opts;
  opts.samples = 20000;
  auto record = [&](const std::string& name, const PrivacyVerdict& v) {
    ck.expect(v.exact_mismatches == 0, name + " exact side differs");
    ck.expect(v.passed, name + " max |z| " + fixed(v.max_abs_z) + " > " + fixed(v.threshold));
    ck.note(name + ": " + std::to_string(v.exact_comparisons) + " exact pairs, max |z| " +
            fixed(v.max_abs_z) + " vs " + fixed(v.threshold));
  };
  // Inputs chosen far apart: one satisfiable, one dense.
  record("sat", check_privacy(ReductionId::kSat, testing::random_3cnf(rng, 4, 2),
                              testing::random_3cnf(rng, 4, 40), opts));
  record("3col", check_privacy(ReductionId::k3Col, Graph::on_vertices(5), Graph::complete(5), opts));
  IntMultiset a, b;
  for (int v : {1, 2, 3}) a.elements.emplace_back(v);
  for (int v : {7, 0, 5}) b.elements.emplace_back(v);
  record("partition", check_privacy(ReductionId::kPartition, a, b, opts));
  return ck.outcome();
}

Outcome degree_protocols() {
  Checker ck;
  const auto start = std::chrono::steady_clock::now();
  core::Rng rng(303);
  const int n = 4;
  std::vector<TruthTable> targets;
  for (int i = 0; i < 100; ++i) targets.push_back(testing::random_table(rng, 2 * n));
  for (int t = 1; t <= 4; ++t) {
    const std::uint64_t degree_bound = (2 * n + t - 1) / t;
    const std::uint64_t length_bound = static_cast<std::uint64_t>((n + t - 1) / t) * ((1u << t) - 1);
    std::uint64_t worst_degree = 0, worst_length = 0, bad = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const auto p = polydeg::degree_reduce_protocol(targets[i], t);
      const bool ok = exact(p, targets[i]);
      const auto m = core::measure(p);
      const std::uint64_t d = m.cost.degree.value_or(~std::uint64_t{0});
      const std::uint64_t len = std::max(m.alice_length, m.bob_length);
      worst_degree = std::max(worst_degree, d);
      worst_length = std::max(worst_length, len);
      const bool row_ok = ok && d <= degree_bound && len <= length_bound;
      bad += !row_ok;
      ck.expect(row_ok, "t=" + std::to_string(t) + " f#" + std::to_string(i) + " degree " +
                            std::to_string(d) + " bound " + std::to_string(degree_bound));
    }
    ck.note("t=" + std::to_string(t) + ": max degree " + std::to_string(worst_degree) + "/" +
            std::to_string(degree_bound) + ", max length " + std::to_string(worst_length) + "/" +
            std::to_string(length_bound) + ", failing " + std::to_string(bad));
  }
  const auto eq2 = core::equality_table(2);
  const auto m2 = polydeg::search_idg1_protocol(eq2, 2);
  ck.expect(!m2.protocol.has_value(), "idg1 m=2 found a protocol");
  const auto m3 = polydeg::search_idg1_protocol(eq2, 3);
  ck.expect(m3.protocol.has_value() && exact(*m3.protocol, eq2), "idg1 m=3 not found or wrong");
  ck.note("idg1 EQ2: m=2 none after " + std::to_string(m2.certificate.map_pairs_examined) +
          " map pairs, m=3 " + (m3.protocol ? "found" : "none"));
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ck.expect(secs < 600, "runtime " + fixed(secs, 1) + "s");
  ck.note(fixed(secs, 1) + "s");
  return ck.outcome();
}

Outcome z6_equality() {
  Checker ck;
  for (std::uint32_t c = 0; c < 6; ++c) {
    ck.expect(polydeg::mv_predicate(c) == (c == 0 ? 1 : 0), "predicate at c=" + std::to_string(c));
  }
  for (int n = 1; n <= 3; ++n) {
    const std::size_t size = std::size_t{1} << n;
    const auto res = polydeg::find_mv_family(size, n);
    ck.expect(res.family.has_value(), "no family of size " + std::to_string(size));
    if (!res.family) continue;
    const auto p = polydeg::mv_equality_protocol(*res.family);
    ck.expect(exact(p, core::equality_table(n)), "mismatch at n=" + std::to_string(n));
    const auto d = core::measure(p).cost.degree;
    ck.expect(d.has_value() && *d == 2, "degree at n=" + std::to_string(n));
    ck.note("size " + std::to_string(size) + " in Z6^" + std::to_string(n) + " after " +
            std::to_string(res.nodes) + " nodes");
  }
  return ck.outcome();
}

combine::Dnf random_dnf(core::Rng& rng, int n) {
  std::vector<combine::Term> terms;
  const int count = 1 + static_cast<int>(rng.uniform(8));
  for (int k = 0; k < count; ++k) {
    const std::uint64_t vars = rng.uniform(std::uint64_t{1} << n);
    const std::uint64_t signs = rng.uniform(std::uint64_t{1} << n);
    terms.push_back({vars & signs, vars & ~signs});
  }
  return combine::Dnf(n, std::move(terms));
}

Outcome combined_functions() {
  Checker ck;
  for (int n = 1; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) {
      ck.expect(combine::greedy_covering_code(n, r).covers(),
                "code n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  core::Rng rng(404);
  const int n = 8;
  const auto code = combine::greedy_covering_code(n, combine::default_covering_radius(n));
  const double cover_ref = static_cast<double>(code.codewords.size()) * code.r *
                           static_cast<double>(combine::binomial_prefix(n, (code.r + 1) / 2));
  const double mono_ref = n * static_cast<double>(combine::binomial_prefix(n, n / 3));
  double cover_max = 0, mono_max = 0;
  for (int i = 0; i < 50; ++i) {
    const std::string tag = "#" + std::to_string(i);
    const auto g = testing::random_table(rng, n);
    const auto pc = combine::covering_code_protocol_or(g, code);
    ck.expect(exact(pc, core::combined(g, Combiner::kOr)), "cover-or " + tag);
    cover_max = std::max(cover_max, static_cast<double>(core::measure(pc).cost.gate_count));

    const auto mg = testing::random_monotone(rng, n, 1 + i % 6);
    const auto pm = combine::monotone_protocol_or(mg);
    ck.expect(exact(pm, core::combined(mg, Combiner::kOr)), "monotone-or " + tag);
    mono_max = std::max(mono_max, static_cast<double>(core::measure(pm).cost.gate_count));
    const auto md = combine::monotone_dnf(mg);
    ck.expect(exact(combine::monotone_width_protocol_or(md, md.width()), core::combined(mg, Combiner::kOr)),
              "monotone-width " + tag);

    const auto pa = combine::alternation_protocol_or(g);
    ck.expect(exact(pa, core::combined(g, Combiner::kOr)), "alternation " + tag);
    const auto dec = combine::alternation_decompose(g);
    bool telescopes = true;
    for (std::uint64_t z = 0; z < g.size(); ++z) {
      bool v = dec.base;
      for (const auto& part : dec.parts) v ^= part[z];
      telescopes = telescopes && v == g[z];
    }
    for (const auto& part : dec.parts) ck.expect(core::is_monotone(part), "alternation part " + tag);
    ck.expect(telescopes, "alternation telescoping " + tag);

    const auto d = random_dnf(rng, n);
    ck.expect(exact(combine::dnf_protocol_and(d), core::combined(d.to_table(), Combiner::kAnd)),
              "dnf-and " + tag);
  }
  for (int m = 2; m <= 12; m += 2) {
    const auto g = testing::random_monotone(rng, m, 3);
    const auto ev = combine::bsm_to_circuit(combine::monotone_protocol_or(g));
    bool ok = true;
    for (std::uint64_t z = 0; z < g.size(); ++z) ok = ok && ev.evaluate(z) == g[z];
    ck.expect(ok, "circuit n=" + std::to_string(m));
    if (m <= 8) {
      const auto h = testing::random_table(rng, m);
      const auto eh = combine::bsm_to_circuit(combine::alternation_protocol_or(h));
      bool ok2 = true;
      for (std::uint64_t z = 0; z < h.size(); ++z) ok2 = ok2 && eh.evaluate(z) == h[z];
      ck.expect(ok2, "circuit (alternation) n=" + std::to_string(m));
    }
  }
  ck.note("cover-or size " + fixed(cover_max, 0) + " bound m*r*C(n,<=ceil(r/2)) " + fixed(cover_ref, 0) +
          " ratio " + fixed(cover_max / cover_ref));
  ck.note("monotone-or size " + fixed(mono_max, 0) + " bound n*C(n,<=n/3) " + fixed(mono_ref, 0) +
          " ratio " + fixed(mono_max / mono_ref));
  return ck.outcome();
}

void expect_scheme(Checker& ck, const bridges::IhScheme& s, const std::string& what) {
  const auto a = bridges::audit_ih(s);
  ck.expect(a.correct(), what + ": " + std::to_string(a.wrong.size()) + " wrong");
  ck.expect(a.private_(), what + ": marginals depend on the input");
}

Outcome bridges_criterion() {
  Checker ck;
  core::Rng rng(505);
  for (int n = 1; n <= 6; ++n) {
    const auto g = testing::random_table(rng, n);
    const auto s = bridges::xor_bsm_to_ih(core::lookup_protocol(core::combined(g, Combiner::kXor)), g);
    expect_scheme(ck, s, "xor-ih n=" + std::to_string(n));
    const auto back = bridges::ih_to_bsm(s);
    ck.expect(back.target == core::combined(g, Combiner::kXor), "round trip target n=" + std::to_string(n));
    ck.expect(exact(back.protocol, back.target), "round trip protocol n=" + std::to_string(n));
  }
  for (auto [id, n] : {std::pair{splithide::ReductionId::kSat, 1}, std::pair{splithide::ReductionId::k3Col, 3}}) {
    const auto fam = bridges::split_family(id, n);
    const auto index = bridges::index_split_queries(fam);
    const auto s = bridges::splithide_bsm_to_ih(fam, index, bridges::split_language_lookup(fam, index));
    expect_scheme(ck, s, "sh-ih " + fam.name);
    ck.note(fam.name + " randomness " + std::to_string(fam.randomness_count));
  }
  for (int n = 1; n <= 4; ++n) {
    const auto code = bridges::hadamard_code(n);
    const auto sa = bridges::audit_smooth_code(code);
    ck.expect(sa.decoding_errors == 0 && sa.smooth, "hadamard n=" + std::to_string(n));
    const auto pir = bridges::smooth_ldc_to_pir(code);
    const auto pa = bridges::audit_pir(pir);
    ck.expect(pa.errors == 0 && pa.index_hidden, "ldc-pir n=" + std::to_string(n));
    // The database has n entries, so f takes floor(log2 n) bits.
    const int arity = std::bit_width(static_cast<unsigned>(n)) - 1;
    const auto f = testing::random_table(rng, arity);
    expect_scheme(ck, bridges::pir_to_ih(pir, f), "pir-ih n=" + std::to_string(n));
  }
  return ck.outcome();
}

Outcome matmul_extraction() {
  using namespace matmul;
  Checker ck;
  const auto text = core::read_file(BSMWB_DATA_DIR "/strassen.circ");
  const auto circuit = ArithCircuit::parse(text);
  const auto ex = extract_low_degree(circuit);
  ck.expect(circuit.multiplication_count() == 7, "strassen multiplies");
  ck.expect(ex.decomposition.rank_bound() <= 14, "strassen terms");
  ck.expect(verify_decomposition(ex.decomposition, 2).ok(), "strassen product");
  for (std::size_t i = 0; i < ex.decomposition.terms.size(); ++i) {
    auto cut = ex.decomposition;
    cut.terms.erase(cut.terms.begin() + static_cast<std::ptrdiff_t>(i));
    ck.expect(!verify_decomposition(cut, 2).ok(), "deleting term " + std::to_string(i));
  }
  ck.note("strassen: " + std::to_string(ex.decomposition.rank_bound()) + " terms");
  core::Rng rng(606);
  for (int i = 0; i < 100; ++i) {
    const auto c = random_circuit(rng, 1 + i % 8);
    const auto e = extract_low_degree(c);
    const auto full = expand_outputs(c);
    const auto bilinear = e.decomposition.expand();
    ck.expect(e.decomposition.rank_bound() <= 2 * e.multiplication_count, "term count #" + std::to_string(i));
    for (std::size_t o = 0; o < full.size(); ++o) {
      const auto trunc = truncate_low_degree(full[o]);
      const auto it = bilinear.find(e.output_names[o]);
      const bool same = it == bilinear.end() ? trunc.ab.empty() : it->second == trunc.ab;
      ck.expect(same && trunc == e.parts[o], "expansion #" + std::to_string(i));
    }
  }
  return ck.outcome();
}

Outcome dovetail_criterion() {
  using namespace dovetail;
  Checker ck;
  std::uint64_t pairs = 0, max_steps = 0;
  for (const auto& m : {equality_language(), prefix_language()}) {
    const auto all = shortlex_up_to(kDeskLimit);
    std::vector<CountMessage> alice, bob;
    for (const auto& s : all) {
      alice.push_back(alice_message(s, m));
      bob.push_back(bob_message(s, m));
      ck.expect(alice.back().to_bits().size() <= 2 * s.size() + 1, "alice length " + s);
      ck.expect(bob.back().to_bits().size() <= 2 * s.size() + 1, "bob length " + s);
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        // Halting is enforced: a run past the certified budget throws.
        try {
          const auto r = carol_dovetail(alice[i], bob[j], m);
          ck.expect(r.accept == m.member(all[i], all[j]), m.name + " " + all[i] + "," + all[j]);
          max_steps = std::max(max_steps, r.steps);
        } catch (const Error& e) {
          ck.expect(false, m.name + " " + all[i] + "," + all[j] + ": " + e.what());
        }
        ++pairs;
      }
    }
  }
  ck.note(std::to_string(pairs) + " pairs, max steps " + std::to_string(max_steps));
  return ck.outcome();
}

Outcome reproducibility() {
  Checker ck;
  const fs::path root = fs::temp_directory_path() / "bsmwb-acceptance-repro";
  fs::remove_all(root);
  fs::create_directories(root);
  auto run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int rc = tools::run_cli(args, out, err);
    return std::pair{rc, out.str() + err.str()};
  };
  auto in = [&](const std::string& rel) { return (root / "inputs" / rel).string(); };
  // Shared inputs.
  const std::vector<std::vector<std::string>> setup = {
      {"--seed", "1", "--out-dir", in("fn4"), "gen", "fn", "--n", "4"},
      {"--seed", "2", "--out-dir", in("fn3"), "gen", "fn", "--n", "3"},
      {"--seed", "3", "--out-dir", in("cnf"), "gen", "cnf", "--n", "3"},
      {"--seed", "4", "--out-dir", in("graph"), "gen", "graph", "--n", "4"},
      {"--seed", "5", "--out-dir", in("set"), "gen", "multiset", "--n", "3"},
  };
  for (const auto& a : setup) {
    const auto [rc, text] = run(a);
    ck.expect(rc == 0, "setup failed: " + text);
  }
  const std::string fn4 = in("fn4/fn.tt"), fn3 = in("fn3/fn.tt");
  const std::vector<std::vector<std::string>> pool = {
      {"gen", "fn", "--n", "5"},
      {"gen", "cnf", "--n", "4", "--clauses", "9"},
      {"gen", "graph", "--n", "5"},
      {"gen", "circuit", "--gates", "6"},
      {"combine", "alt", "--fn", fn4},
      {"combine", "cover-or", "--fn", fn4},
      {"combine", "dnf-and", "--fn", fn3},
      {"code", "greedy", "--n", "7", "--r", "2"},
      {"reduce", "sat", "--in", in("cnf/phi.cnf")},
      {"reduce", "3col", "--in", in("graph/graph.edges")},
      {"reduce", "partition", "--in", in("set/set.txt")},
      {"privacy", "partition", "--a", in("set/set.txt"), "--b", in("set/set.txt"), "--samples", "300"},
      {"degree", "reduce", "--fn", fn4, "--t", "2"},
      {"mv", "find", "--n", "2", "--k", "2"},
      {"dovetail", "run", "--lang", "eq", "--x", "0110", "--y", "0110"},
      {"matmul", "extract", "--circuit", BSMWB_DATA_DIR "/strassen.circ", "--n", "2"},
      {"dovetail", "run", "--lang", "prefix", "--x", "1101", "--y", "11", "--trace"},
      {"bridge", "ldc-pir", "--code", "hadamard", "--n", "3"},
      {"bridge", "sh-ih", "--family", "sat", "--n", "1"},
  };
  core::Rng rng(707);
  int reproduced = 0;
  for (int i = 0; i < 20; ++i) {
    const auto& pick = pool[rng.uniform(pool.size())];
    const std::string out = (root / ("run" + std::to_string(i))).string();
    std::vector<std::string> args = {"--seed", std::to_string(rng.uniform(1000)), "--out-dir", out};
    args.insert(args.end(), pick.begin(), pick.end());
    std::string label = pick[0] + " " + pick[1];
    const auto [rc, text] = run(args);
    ck.expect(rc == 0, label + " rc " + std::to_string(rc) + ": " + text);
    if (rc != 0) continue;
    std::string manifest;
    for (const auto& e : fs::directory_iterator(out)) {
      if (e.path().string().ends_with(".manifest.json")) manifest = e.path().string();
    }
    const auto [rc2, text2] = run({"rerun", manifest});
    const bool ok = rc2 == 0 && text2.find("identical") != std::string::npos;
    ck.expect(ok, label + " rerun: " + text2);
    reproduced += ok;
  }
  ck.note(std::to_string(reproduced) + "/20 manifests reproduced");
  fs::remove_all(root);
  return ck.outcome();
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> all = {
      {"split_hide_equivalence", split_hide_equivalence},
      {"split_hide_privacy", split_hide_privacy},
      {"degree_protocols", degree_protocols},
      {"z6_equality", z6_equality},
      {"combined_functions", combined_functions},
      {"bridges", bridges_criterion},
      {"matmul_extraction", matmul_extraction},
      {"dovetail", dovetail_criterion},
      {"reproducibility", reproducibility},
  };
  return all;
}

}  // namespace
}  // namespace bsmwb

int main(int argc, char** argv) {
  using namespace bsmwb;
  const std::string only = argc > 1 ? argv[1] : "";
  bool known = only.empty();
  bool all_pass = true;
  for (const auto& [name, fn] : criteria()) {
    if (!only.empty() && name != only) continue;
    known = true;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    all_pass = all_pass && o.pass;
  }
  if (!known) {
    std::cerr << "unknown criterion: " << only << '\n';
    return 2;
  }
  return all_pass ? 0 : 1;
}
