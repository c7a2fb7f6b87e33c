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

#include "commands.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bsmwb/bridges/bridges.hpp"
#include "bsmwb/cli/cli.hpp"
#include "bsmwb/combine/combine.hpp"
#include "bsmwb/core/error.hpp"
#include "bsmwb/core/protocol_io.hpp"
#include "bsmwb/core/rng.hpp"
#include "bsmwb/dovetail/dovetail.hpp"
#include "bsmwb/matmul/matmul.hpp"
#include "bsmwb/polydeg/polydeg.hpp"
#include "bsmwb/splithide/deciders.hpp"
#include "bsmwb/splithide/privacy.hpp"
#include "bsmwb/splithide/reductions.hpp"

namespace bsmwb::tools {

namespace fs = std::filesystem;
using core::BsmProtocol;
using core::Json;
using core::TruthTable;

namespace {

struct Context {
  std::uint64_t seed = 1;
  int limit_bits = 24;
  int jobs = 1;
  std::string out_dir = "bsmwb-out";
  std::string base_dir;  // relative input paths resolve against this
  std::ostream* out = nullptr;
  std::string command;
  std::vector<cli::FileDigest> inputs;
  std::vector<std::pair<std::string, std::string>> outputs;
  std::vector<cli::ReportRow> rows;
  bool mismatch = false;
  bool manifest = true;

  std::string read(const std::string& path) {
    fs::path p(path);
    if (p.is_relative()) p = fs::path(base_dir) / p;
    std::string text = core::read_file(p.string());
    inputs.push_back({fs::weakly_canonical(p).string(), cli::sha256_hex(text)});
    return text;
  }
  void emit(const std::string& name, std::string content) {
    outputs.emplace_back(name, std::move(content));
  }
  core::Limits limits() const { return {limit_bits, true}; }
  core::VerifyOptions verify_options() const { return {limits(), jobs}; }
  void row(cli::ReportRow r) {
    r.command = command;
    r.pass = r.recompute_pass();
    if (!r.pass) mismatch = true;
    rows.push_back(std::move(r));
  }
};

// -- shared helpers -----------------------------------------------------------

TruthTable load_table(Context& ctx, const std::string& path) {
  return core::truth_table_from_text(ctx.read(path));
}

BsmProtocol load_protocol(Context& ctx, const std::string& path) {
  return core::protocol_from_json(core::parse_document(ctx.read(path), path));
}

std::string protocol_text(const BsmProtocol& p) {
  return core::dump_canonical(core::protocol_to_json(p));
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Verifies, records the report files and fills the shared row fields.
cli::ReportRow verified_row(Context& ctx, const BsmProtocol& p, const TruthTable& target) {
  const auto report = core::verify_exhaustive(p, target, ctx.verify_options());
  ctx.emit("verify.json", core::dump_canonical(core::report_to_json(report)));
  ctx.emit("verify.csv", core::report_to_csv(report));
  const auto m = core::measure(p);
  cli::ReportRow row;
  row.n = p.input_arity();
  row.size = static_cast<double>(m.cost.gate_count);
  if (m.cost.degree) row.degree = static_cast<double>(*m.cost.degree);
  row.mismatches = report.mismatches.size();
  *ctx.out << "pairs " << report.pairs_checked << ", mismatches " << report.mismatches.size()
           << (report.audited ? "" : " (unaudited Carol)") << '\n';
  return row;
}

Json ih_audit_json(const bridges::IhAudit& a) {
  Json wrong = Json::array();
  for (const auto& w : a.wrong) wrong.push_back({w.x, w.r});
  return Json{{"pairs_checked", a.pairs_checked},   {"wrong", wrong},
              {"marginal_a_fixed", a.marginal_a_fixed}, {"marginal_b_fixed", a.marginal_b_fixed},
              {"uniform_a", a.uniform_a},           {"uniform_b", a.uniform_b}};
}

void emit_ih(Context& ctx, const bridges::IhScheme& scheme) {
  const auto audit = bridges::audit_ih(scheme, ctx.jobs);
  ctx.emit("scheme.json", core::dump_canonical(bridges::ih_scheme_to_json(scheme)));
  ctx.emit("audit.json", core::dump_canonical(ih_audit_json(audit)));
  cli::ReportRow row;
  row.n = scheme.n;
  row.size = static_cast<double>(scheme.henry_size());
  row.mismatches = audit.wrong.size() + (audit.private_() ? 0 : 1);
  ctx.row(row);
  *ctx.out << "pairs " << audit.pairs_checked << ", wrong " << audit.wrong.size() << ", private "
           << (audit.private_() ? "yes" : "no") << '\n';
}

// -- commands -------------------------------------------------------------------

void cmd_verify(Context& ctx, const std::string& proto, const std::string& fn) {
  const auto p = load_protocol(ctx, proto);
  const auto f = load_table(ctx, fn);
  ctx.row(verified_row(ctx, p, f));
}

void cmd_reduce(Context& ctx, splithide::ReductionId id, const std::string& in,
                const std::string& out_name) {
  using namespace splithide;
  const std::string text = ctx.read(in);
  cli::ReportRow row;
  bool before = false, after = false;
  ReductionDocument doc;
  switch (id) {
    case ReductionId::kSat: {
      const Cnf phi = from_dimacs(text);
      const auto out = reduce_sat(phi, ctx.seed);
      doc = make_document(id, out);
      ctx.emit("alpha.cnf", to_dimacs(out.alice_part));
      ctx.emit("beta.cnf", to_dimacs(out.bob_part));
      before = decide_sat(phi);
      after = decide_sat(Cnf::conjoin(out.alice_part, out.bob_part));
      row.n = phi.variable_count();
      break;
    }
    case ReductionId::k3Col: {
      const Graph g = from_edge_list(text);
      const auto out = reduce_3col(g, ctx.seed);
      doc = make_document(id, out);
      ctx.emit("A.edges", to_edge_list(out.alice_part));
      ctx.emit("B.edges", to_edge_list(out.bob_part));
      before = decide_3col(g);
      after = decide_3col(Graph::merge(out.alice_part, out.bob_part));
      row.n = static_cast<std::int64_t>(g.vertices().size());
      break;
    }
    case ReductionId::kPartition: {
      const IntMultiset s = from_lines(text);
      const auto out = reduce_partition(s, ctx.seed);
      doc = make_document(id, out);
      ctx.emit("a.txt", to_lines(out.alice_part));
      ctx.emit("b.txt", to_lines(out.bob_part));
      IntMultiset both = out.alice_part;
      for (const auto& v : out.bob_part.elements) both.elements.push_back(v);
      before = decide_partition(s);
      after = decide_partition(both);
      row.n = static_cast<std::int64_t>(s.elements.size());
      break;
    }
  }
  ctx.emit(out_name, doc.to_text());
  row.mismatches = before != after;
  ctx.row(row);
  *ctx.out << "input " << (before ? "yes" : "no") << ", merged parts " << (after ? "yes" : "no") << '\n';
}

splithide::SplitInput parse_split_input(splithide::ReductionId id, const std::string& text) {
  switch (id) {
    case splithide::ReductionId::kSat:
      return splithide::from_dimacs(text);
    case splithide::ReductionId::k3Col:
      return splithide::from_edge_list(text);
    case splithide::ReductionId::kPartition:
      break;
  }
  return splithide::from_lines(text);
}

void cmd_privacy(Context& ctx, splithide::ReductionId id, const std::string& a,
                 const std::string& b, std::uint64_t samples) {
  const auto first = parse_split_input(id, ctx.read(a));
  const auto second = parse_split_input(id, ctx.read(b));
  splithide::PrivacyOptions opts;
  opts.samples = samples;
  opts.seed = ctx.seed;
  opts.jobs = ctx.jobs;
  const auto v = splithide::check_privacy(id, first, second, opts);
  Json failures = Json::array();
  for (const auto& f : v.failures) {
    failures.push_back({{"label", f.label}, {"observed", f.observed}, {"expected", f.expected}, {"z", f.z}});
  }
  ctx.emit("privacy.json", core::dump_canonical(Json{{"passed", v.passed},
                                                     {"exact_comparisons", v.exact_comparisons},
                                                     {"exact_mismatches", v.exact_mismatches},
                                                     {"statistics", v.statistics},
                                                     {"threshold", v.threshold},
                                                     {"max_abs_z", v.max_abs_z},
                                                     {"failures", failures}}));
  cli::ReportRow row;
  row.mismatches = v.exact_mismatches + v.failures.size();
  ctx.row(row);
  *ctx.out << "exact mismatches " << v.exact_mismatches << ", max |z| " << v.max_abs_z
           << " (threshold " << v.threshold << "), " << (v.passed ? "private" : "NOT private") << '\n';
}

void cmd_degree_reduce(Context& ctx, const std::string& fn, int t) {
  const auto f = load_table(ctx, fn);
  require(f.arity() % 2 == 0, "two-party function needs an even arity");
  const auto p = polydeg::degree_reduce_protocol(f, t);
  ctx.emit("protocol.json", protocol_text(p));
  auto row = verified_row(ctx, p, f);
  const std::int64_t n = f.arity() / 2;
  row.t = t;
  row.size = std::max(p.alice_length(), p.bob_length());
  row.size_bound = static_cast<double>(ceil_div(n, t) * ((std::int64_t{1} << t) - 1));
  row.degree_bound = static_cast<double>(ceil_div(2 * n, t));
  ctx.row(row);
}

void cmd_search_idg1(Context& ctx, const std::string& fn, int m) {
  const auto f = load_table(ctx, fn);
  polydeg::Idg1Options opts;
  opts.jobs = ctx.jobs;
  const auto res = polydeg::search_idg1_protocol(f, m, opts);
  cli::ReportRow row;
  row.n = f.arity() / 2;
  row.m = m;
  if (res.protocol) {
    ctx.emit("protocol.json", protocol_text(*res.protocol));
    const auto checked = verified_row(ctx, *res.protocol, f);
    const auto bounds = polydeg::check_degree_bounds(*res.protocol);
    row.mismatches = checked.mismatches;
    row.degree = static_cast<double>(bounds.degree);
    row.reference = bounds.bound;
    row.reference_formula = "n/log2(m+1)";
    *ctx.out << "found a protocol with message length " << m << '\n';
  } else {
    ctx.emit("certificate.json",
             core::dump_canonical(Json{{"found", false},
                                       {"map_pairs_examined", res.certificate.map_pairs_examined},
                                       {"forms_per_pair", res.certificate.forms_per_pair}}));
    *ctx.out << "no protocol with message length " << m << " (" << res.certificate.map_pairs_examined
             << " map pairs examined)\n";
  }
  ctx.row(row);
}

void cmd_mv_find(Context& ctx, int n, int k) {
  require(n >= 1 && n <= 6, "mv find supports 1 <= n <= 6");
  const auto res = polydeg::find_mv_family(std::size_t{1} << n, k);
  cli::ReportRow row;
  row.n = n;
  row.m = k;
  if (res.family) {
    ctx.emit("family.txt", res.family->to_text());
    *ctx.out << "found a family of size " << res.family->size() << " in dimension " << k << '\n';
  } else {
    ctx.emit("mv-search.json", core::dump_canonical(Json{{"found", false}, {"nodes", res.nodes}}));
    *ctx.out << "no family of size " << (1 << n) << " in dimension " << k << '\n';
  }
  ctx.row(row);
}

void cmd_mv_protocol(Context& ctx, const std::string& file) {
  const auto family = polydeg::MvFamily::from_text(ctx.read(file));
  require(std::has_single_bit(family.size()), "family size must be a power of two");
  const int n = std::countr_zero(family.size());
  const auto p = polydeg::mv_equality_protocol(family);
  ctx.emit("protocol.json", protocol_text(p));
  auto row = verified_row(ctx, p, core::equality_table(n));
  const auto bounds = polydeg::check_degree_bounds(p);
  row.m = family.dimension();
  row.reference = bounds.bound;
  row.reference_formula = "n/log2(m+1)";
  ctx.row(row);
}

void cmd_combine(Context& ctx, const std::string& kind, const std::string& fn,
                 const std::string& code_file, int r) {
  const auto g = load_table(ctx, fn);
  const int n = g.arity();
  std::optional<BsmProtocol> p;
  cli::ReportRow extra;
  core::Combiner op = core::Combiner::kOr;
  if (kind == "dnf-and") {
    op = core::Combiner::kAnd;
    p = combine::dnf_protocol_and(combine::canonical_dnf(g));
  } else if (kind == "monotone-or") {
    p = combine::monotone_protocol_or(g);
    extra.reference = n * static_cast<double>(combine::binomial_prefix(n, n / 3));
    extra.reference_formula = "n*C(n,<=n/3)";
  } else if (kind == "alt") {
    p = combine::alternation_protocol_or(g);
  } else {
    combine::CoveringCode code;
    if (!code_file.empty()) {
      code = combine::CoveringCode::from_text(ctx.read(code_file));
    } else {
      code = combine::greedy_covering_code(n, r >= 0 ? r : combine::default_covering_radius(n));
      ctx.emit("code.txt", code.to_text());
    }
    p = combine::covering_code_protocol_or(g, code, {ctx.jobs});
    const auto m = static_cast<double>(code.codewords.size());
    extra.r = code.r;
    extra.m = static_cast<std::int64_t>(code.codewords.size());
    extra.reference = m * code.r * static_cast<double>(combine::binomial_prefix(n, (code.r + 1) / 2));
    extra.reference_formula = "m*r*C(n,<=ceil(r/2))";
  }
  ctx.emit("protocol.json", protocol_text(*p));
  auto row = verified_row(ctx, *p, core::combined(g, op));
  row.r = extra.r;
  row.m = extra.m;
  row.reference = extra.reference;
  row.reference_formula = extra.reference_formula;
  ctx.row(row);
}

void cmd_to_circuit(Context& ctx, const std::string& proto, const std::string& fn) {
  const auto p = load_protocol(ctx, proto);
  const auto ev = combine::bsm_to_circuit(p);
  const auto table =
      core::tabulate([&](std::uint64_t z) { return ev.evaluate(z); }, ev.n, ctx.limits());
  ctx.emit("circuit.tt", core::truth_table_to_text(table));
  cli::ReportRow row;
  row.n = ev.n;
  row.size = static_cast<double>(ev.size);
  if (!fn.empty()) {
    const auto g = load_table(ctx, fn);
    require(g.arity() == ev.n, "function arity differs from the protocol input length");
    for (std::uint64_t z = 0; z < g.size(); ++z) row.mismatches += g[z] != table[z];
  }
  ctx.row(row);
  *ctx.out << "circuit size " << ev.size << ", mismatches " << row.mismatches << '\n';
}

void cmd_code_greedy(Context& ctx, int n, int r) {
  const auto code = combine::greedy_covering_code(n, r);
  ctx.emit("code.txt", code.to_text());
  cli::ReportRow row;
  row.n = n;
  row.r = r;
  row.m = static_cast<std::int64_t>(code.codewords.size());
  row.mismatches = code.covers() ? 0 : 1;
  ctx.row(row);
  *ctx.out << code.codewords.size() << " codewords\n";
}

void cmd_bridge(Context& ctx, const std::string& kind, const std::string& in, const std::string& fn,
                const std::string& family, const std::string& code, int n) {
  auto need = [](const std::string& v, const char* flag) {
    require(!v.empty(), std::string("this conversion needs ") + flag);
    return v;
  };
  if (kind == "xor-ih") {
    const auto p = load_protocol(ctx, need(in, "--in"));
    const auto g = load_table(ctx, need(fn, "--fn"));
    emit_ih(ctx, bridges::xor_bsm_to_ih(p, g));
  } else if (kind == "sh-ih") {
    const auto fam = bridges::split_family(splithide::reduction_from_name(need(family, "--family")), n);
    const auto index = bridges::index_split_queries(fam);
    const auto p = bridges::split_language_lookup(fam, index);
    emit_ih(ctx, bridges::splithide_bsm_to_ih(fam, index, p));
  } else if (kind == "ih-bsm") {
    const std::string path = need(in, "--in");
    const auto scheme = bridges::ih_scheme_from_json(core::parse_document(ctx.read(path), path));
    const auto res = bridges::ih_to_bsm(scheme);
    ctx.emit("protocol.json", protocol_text(res.protocol));
    ctx.emit("target.tt", core::truth_table_to_text(res.target));
    ctx.row(verified_row(ctx, res.protocol, res.target));
  } else if (kind == "ldc-pir") {
    const auto pir = bridges::smooth_ldc_to_pir(bridges::smooth_code_by_name(need(code, "--code"), n));
    const auto audit = bridges::audit_pir(pir);
    ctx.emit("pir.json", core::dump_canonical(bridges::pir_scheme_to_json(pir)));
    cli::ReportRow row;
    row.n = pir.code.message_bits;
    row.mismatches = audit.errors + (audit.index_hidden ? 0 : 1);
    ctx.row(row);
    *ctx.out << "runs " << audit.runs_checked << ", errors " << audit.errors << ", index hidden "
             << (audit.index_hidden ? "yes" : "no") << '\n';
  } else {
    const std::string path = need(in, "--in");
    const auto pir = bridges::pir_scheme_from_json(core::parse_document(ctx.read(path), path));
    const auto f = load_table(ctx, need(fn, "--fn"));
    emit_ih(ctx, bridges::pir_to_ih(pir, f));
  }
}

void cmd_matmul_extract(Context& ctx, const std::string& circuit, int n) {
  const auto c = matmul::ArithCircuit::parse(ctx.read(circuit));
  const auto e = matmul::extract_low_degree(c);
  const auto check = matmul::verify_decomposition(e.decomposition, n, ctx.seed);
  ctx.emit("decomposition.json", e.decomposition.to_json());
  cli::ReportRow row;
  row.n = n;
  row.t = static_cast<std::int64_t>(e.multiplication_count);
  row.size = static_cast<double>(e.decomposition.rank_bound());
  row.size_bound = 2.0 * static_cast<double>(e.multiplication_count);
  row.mismatches = check.ok() ? 0 : 1;
  ctx.row(row);
  *ctx.out << e.multiplication_count << " multiplications, " << e.decomposition.rank_bound()
           << " terms, product " << (check.ok() ? "reproduced" : "NOT reproduced") << '\n';
}

void cmd_matmul_verify(Context& ctx, const std::string& decomp, int n) {
  const auto d = matmul::TensorDecomposition::from_json(ctx.read(decomp));
  const auto check = matmul::verify_decomposition(d, n, ctx.seed);
  ctx.emit("verify.json", core::dump_canonical(Json{{"terms", d.rank_bound()},
                                                    {"coefficients_match", check.coefficients_match},
                                                    {"spot_checks_pass", check.spot_checks_pass}}));
  cli::ReportRow row;
  row.n = n;
  row.size = static_cast<double>(d.rank_bound());
  row.mismatches = check.ok() ? 0 : 1;
  ctx.row(row);
  *ctx.out << (check.ok() ? "decomposition computes" : "decomposition does NOT compute") << " the "
           << n << "x" << n << " product\n";
}

void cmd_dovetail(Context& ctx, const std::vector<std::string>& lang, std::string x, std::string y,
                  bool trace) {
  require(!lang.empty(), "--lang needs a value");
  dovetail::SemiDecider machine;
  if (lang[0] == "custom") {
    require(lang.size() == 2, "--lang custom needs a FILE");
    machine = dovetail::table_language(ctx.read(lang[1]));
  } else {
    require(lang.size() == 1, "only --lang custom takes a file");
    machine = dovetail::language_by_name(lang[0]);
  }
  if (x == "-") x.clear();
  if (y == "-") y.clear();
  const auto a = dovetail::alice_message(x, machine);
  const auto b = dovetail::bob_message(y, machine);
  dovetail::DovetailOptions opts;
  opts.trace = trace;
  const auto res = dovetail::carol_dovetail(a, b, machine, opts);
  ctx.emit("dovetail.json", core::dump_canonical(Json{{"language", machine.name},
                                                      {"x", x},
                                                      {"y", y},
                                                      {"alice_message", a.to_bits()},
                                                      {"bob_message", b.to_bits()},
                                                      {"count_from", res.used_alice ? "alice" : "bob"},
                                                      {"accept", res.accept},
                                                      {"sweeps", res.sweeps},
                                                      {"steps", res.steps}}));
  if (trace) ctx.emit("trace.csv", res.trace_csv());
  cli::ReportRow row;
  const auto n = static_cast<std::int64_t>(std::max(x.size(), y.size()));
  row.n = n;
  row.size = static_cast<double>(std::max(a.to_bits().size(), b.to_bits().size()));
  row.size_bound = static_cast<double>(2 * n + 1);
  if (machine.member) row.mismatches = machine.member(x, y) != res.accept;
  ctx.row(row);
  *ctx.out << (res.accept ? "accept" : "reject") << " after " << res.sweeps << " sweeps\n";
}

void cmd_gen(Context& ctx, const std::string& kind, int n, int clauses, int gates) {
  core::Rng rng(ctx.seed);
  if (kind == "fn") {
    require(n >= 0 && n <= 24, "gen fn supports n <= 24");
    std::vector<std::uint8_t> v(std::uint64_t{1} << n);
    for (auto& b : v) b = rng.coin();
    ctx.emit("fn.tt", core::truth_table_to_text(TruthTable(n, std::move(v))));
  } else if (kind == "cnf") {
    require(n >= 3, "gen cnf needs at least 3 variables");
    splithide::Cnf f(n, {});
    for (int c = 0; c < clauses; ++c) {
      const auto perm = rng.permutation(static_cast<std::uint32_t>(n));
      splithide::Clause cl;
      for (int k = 0; k < 3; ++k) {
        const int v = static_cast<int>(perm[k]) + 1;
        cl.push_back(rng.coin() ? v : -v);
      }
      f.add_clause(cl);
    }
    ctx.emit("phi.cnf", splithide::to_dimacs(f));
  } else if (kind == "graph") {
    require(n >= 1, "gen graph needs a vertex");
    auto g = splithide::Graph::on_vertices(static_cast<std::uint32_t>(n));
    for (std::uint32_t u = 1; u <= static_cast<std::uint32_t>(n); ++u) {
      for (std::uint32_t v = u + 1; v <= static_cast<std::uint32_t>(n); ++v) {
        if (rng.coin()) g.add_edge(u, v);
      }
    }
    ctx.emit("graph.edges", splithide::to_edge_list(g));
  } else if (kind == "multiset") {
    require(n >= 1 && n <= 40, "gen multiset supports 1 <= n <= 40");
    splithide::IntMultiset s;
    for (int i = 0; i < n; ++i) s.elements.emplace_back(rng.uniform(std::uint64_t{1} << n));
    ctx.emit("set.txt", splithide::to_lines(s));
  } else {
    ctx.emit("circuit.circ", matmul::random_circuit(rng, gates).to_text());
  }
}

void cmd_report(Context& ctx, const std::string& dir) {
  const auto table = cli::collect_report(dir);
  ctx.emit("report.csv", table.to_csv());
  ctx.emit("report.txt", table.to_text());
  *ctx.out << table.to_text();
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

void cmd_rerun(Context& ctx, const std::string& path, std::ostream& err) {
  const std::string text = core::read_file(path);
  const auto m = cli::Manifest::from_text(text);
  for (const auto& in : m.inputs) {
    if (cli::sha256_hex(core::read_file(in.path)) != in.sha256) {
      fail(ErrorKind::kIntegrity, "input " + in.path + " changed since the recorded run");
    }
  }
  const fs::path tmp = fs::temp_directory_path() / ("bsmwb-rerun-" + cli::sha256_hex(text).substr(0, 16));
  fs::remove_all(tmp);
  std::vector<std::string> args = {"--seed",     std::to_string(m.seed), "--limit-bits",
                                   std::to_string(m.limit_bits), "--jobs", std::to_string(m.jobs),
                                   "--out-dir",  tmp.string(),         "--base-dir", m.cwd};
  args.insert(args.end(), m.args.begin(), m.args.end());
  std::ostringstream sink;
  const int rc = run_parsed(args, sink, err);
  if (rc != 0 && rc != 2) {
    fs::remove_all(tmp);
    fail(ErrorKind::kMismatch, "re-run failed with exit code " + std::to_string(rc));
  }
  std::vector<std::string> differing;
  std::size_t produced = 0;
  for (const auto& entry : fs::directory_iterator(tmp)) {
    if (!entry.path().filename().string().ends_with(cli::kManifestSuffix)) ++produced;
  }
  for (const auto& o : m.outputs) {
    const fs::path file = tmp / o.path;
    if (!fs::exists(file) || cli::sha256_hex(core::read_file(file.string())) != o.sha256) {
      differing.push_back(o.path);
    }
  }
  fs::remove_all(tmp);
  if (produced != m.outputs.size()) differing.push_back("(output set differs)");
  if (differing.empty()) {
    *ctx.out << "identical: " << m.outputs.size() << " outputs reproduced byte for byte\n";
  } else {
    for (const auto& d : differing) *ctx.out << "differs: " << d << '\n';
    ctx.mismatch = true;
  }
}

// Arguments minus the global flags, for the manifest.
std::vector<std::string> strip_globals(const std::vector<std::string>& args) {
  static const std::vector<std::string> globals = {"--seed", "--limit-bits", "--jobs", "--out-dir",
                                                   "--base-dir"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    bool skip = false;
    for (const auto& g : globals) {
      if (a == g) {
        skip = true;
        ++i;
      } else if (a.rfind(g + "=", 0) == 0) {
        skip = true;
      }
    }
    if (!skip) out.push_back(a);
  }
  return out;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMismatch:
      return 2;
    case ErrorKind::kCapacity:
      return 3;
    case ErrorKind::kParse:
      return 4;
    default:
      return 1;
  }
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  ctx.base_dir = fs::current_path().string();

  CLI::App app{"bsmwb: protocol workbench for simultaneous messages with a weak referee", "bsmwb"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", ctx.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--limit-bits", ctx.limit_bits, "exhaustive enumeration ceiling in bits")
      ->capture_default_str();
  app.add_option("--jobs", ctx.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--out-dir", ctx.out_dir, "directory for artifacts and the run manifest")
      ->capture_default_str();
  app.add_option("--base-dir", ctx.base_dir, "resolve relative inputs here")->group("");

  std::function<void()> action;
  auto leaf = [&](CLI::App* sub, const std::string& id, std::function<void()> fn) {
    sub->fallthrough();
    sub->callback([&ctx, &action, id, fn] {
      ctx.command = id;
      action = fn;
    });
  };

  // verify
  std::string proto, fn, in, out_name = "reduction.txt", a_file, b_file, code_file, family, code;
  std::string decomp, circuit, x, y, dir, manifest;
  std::vector<std::string> lang;
  int t = 1, m = 1, n = 1, k = 1, r = -1, clauses = 10, gates = 6;
  std::uint64_t samples = 20000;
  bool trace = false;
  {
    auto* s = app.add_subcommand("verify", "check a protocol against a function on all pairs");
    s->add_option("--proto", proto)->required();
    s->add_option("--fn", fn)->required();
    leaf(s, "verify", [&] { cmd_verify(ctx, proto, fn); });
  }
  for (const char* group : {"reduce", "privacy"}) {
    auto* g = app.add_subcommand(group, std::string(group) == "reduce"
                                            ? "split an instance into two parts"
                                            : "check input obliviousness of a reduction");
    g->require_subcommand(1);
    g->fallthrough();
    for (const char* name : {"sat", "3col", "partition"}) {
      auto* s = g->add_subcommand(name);
      const auto id = splithide::reduction_from_name(name);
      if (std::string(group) == "reduce") {
        s->add_option("--in", in)->required();
        s->add_option("--out", out_name, "name of the combined document")->capture_default_str();
        leaf(s, std::string("reduce ") + name, [&, id] { cmd_reduce(ctx, id, in, out_name); });
      } else {
        s->add_option("--a", a_file)->required();
        s->add_option("--b", b_file)->required();
        s->add_option("--samples", samples)->capture_default_str();
        leaf(s, std::string("privacy ") + name, [&, id] { cmd_privacy(ctx, id, a_file, b_file, samples); });
      }
    }
  }
  {
    auto* g = app.add_subcommand("degree", "degree-reduction protocols");
    g->require_subcommand(1);
    g->fallthrough();
    auto* s = g->add_subcommand("reduce");
    s->add_option("--fn", fn)->required();
    s->add_option("--t", t)->required();
    leaf(s, "degree reduce", [&] { cmd_degree_reduce(ctx, fn, t); });
    auto* s2 = g->add_subcommand("search-idg1");
    s2->add_option("--fn", fn)->required();
    s2->add_option("--m", m)->required();
    leaf(s2, "degree search-idg1", [&] { cmd_search_idg1(ctx, fn, m); });
  }
  {
    auto* g = app.add_subcommand("mv", "matching-vector equality protocols");
    g->require_subcommand(1);
    g->fallthrough();
    auto* s = g->add_subcommand("find");
    s->add_option("--n", n, "input bits; the family has 2^n vectors")->required();
    s->add_option("--k", k)->required();
    leaf(s, "mv find", [&] { cmd_mv_find(ctx, n, k); });
    auto* s2 = g->add_subcommand("protocol");
    s2->add_option("--family", family)->required();
    leaf(s2, "mv protocol", [&] { cmd_mv_protocol(ctx, family); });
  }
  {
    auto* g = app.add_subcommand("combine", "protocols for g(x op y)");
    g->require_subcommand(1);
    g->fallthrough();
    for (const char* name : {"dnf-and", "monotone-or", "alt", "cover-or"}) {
      auto* s = g->add_subcommand(name);
      s->add_option("--fn", fn)->required();
      if (std::string(name) == "cover-or") {
        auto* c = s->add_option("--code", code_file);
        s->add_option("--r", r, "radius for a greedy code")->excludes(c);
      }
      leaf(s, std::string("combine ") + name, [&, kind = std::string(name)] {
        cmd_combine(ctx, kind, fn, code_file, r);
      });
    }
    auto* s = g->add_subcommand("to-circuit");
    s->add_option("--proto", proto)->required();
    s->add_option("--fn", fn, "optional function to compare against");
    leaf(s, "combine to-circuit", [&] { cmd_to_circuit(ctx, proto, fn); });
  }
  {
    auto* g = app.add_subcommand("code", "covering codes");
    g->require_subcommand(1);
    g->fallthrough();
    auto* s = g->add_subcommand("greedy");
    s->add_option("--n", n)->required();
    s->add_option("--r", r)->required();
    leaf(s, "code greedy", [&] { cmd_code_greedy(ctx, n, r); });
  }
  {
    auto* g = app.add_subcommand("bridge", "conversions between protocol models");
    g->require_subcommand(1);
    g->fallthrough();
    for (const char* name : {"xor-ih", "sh-ih", "ih-bsm", "pir-ih", "ldc-pir"}) {
      auto* s = g->add_subcommand(name);
      s->add_option("--in", in);
      s->add_option("--fn", fn);
      if (std::string(name) == "sh-ih") s->add_option("--family", family, "sat or 3col")->required();
      if (std::string(name) == "ldc-pir") s->add_option("--code", code, "hadamard, repetition or biased")->required();
      if (std::string(name) == "sh-ih" || std::string(name) == "ldc-pir") s->add_option("--n", n)->required();
      leaf(s, std::string("bridge ") + name, [&, kind = std::string(name)] {
        cmd_bridge(ctx, kind, in, fn, family, code, n);
      });
    }
  }
  {
    auto* g = app.add_subcommand("matmul", "bilinear extraction from arithmetic circuits");
    g->require_subcommand(1);
    g->fallthrough();
    auto* s = g->add_subcommand("extract");
    s->add_option("--circuit", circuit)->required();
    s->add_option("--n", n)->required();
    leaf(s, "matmul extract", [&] { cmd_matmul_extract(ctx, circuit, n); });
    auto* s2 = g->add_subcommand("verify");
    s2->add_option("--decomp", decomp)->required();
    s2->add_option("--n", n)->required();
    leaf(s2, "matmul verify", [&] { cmd_matmul_verify(ctx, decomp, n); });
  }
  {
    auto* g = app.add_subcommand("dovetail", "counting messages with a dovetailing Carol");
    g->require_subcommand(1);
    g->fallthrough();
    auto* s = g->add_subcommand("run");
    s->add_option("--lang", lang, "eq, prefix, or custom FILE")->required()->expected(1, 2);
    s->add_option("--x", x, "Alice's bits ('-' for empty)")->required();
    s->add_option("--y", y, "Bob's bits ('-' for empty)")->required();
    s->add_flag("--trace", trace, "write the schedule to trace.csv");
    leaf(s, "dovetail run", [&] { cmd_dovetail(ctx, lang, x, y, trace); });
  }
  {
    auto* g = app.add_subcommand("gen", "seeded random inputs");
    g->require_subcommand(1);
    g->fallthrough();
    for (const char* name : {"fn", "cnf", "graph", "multiset", "circuit"}) {
      auto* s = g->add_subcommand(name);
      if (std::string(name) == "circuit") {
        s->add_option("--gates", gates)->capture_default_str();
      } else {
        s->add_option("--n", n)->required();
      }
      if (std::string(name) == "cnf") s->add_option("--clauses", clauses)->capture_default_str();
      leaf(s, std::string("gen ") + name, [&, kind = std::string(name)] {
        cmd_gen(ctx, kind, n, clauses, gates);
      });
    }
  }
  {
    auto* s = app.add_subcommand("report", "tabulate the manifests under a directory");
    s->add_option("dir", dir)->required();
    leaf(s, "report", [&] {
      ctx.manifest = false;
      cmd_report(ctx, dir);
    });
    auto* s2 = app.add_subcommand("rerun", "re-execute a manifest and compare outputs");
    s2->add_option("manifest", manifest)->required();
    leaf(s2, "rerun", [&] {
      ctx.manifest = false;
      cmd_rerun(ctx, manifest, err);
    });
  }

  std::vector<const char*> argv{"bsmwb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    action();
    if (!ctx.outputs.empty() || ctx.manifest) fs::create_directories(ctx.out_dir);
    for (const auto& [name, content] : ctx.outputs) {
      core::write_file((fs::path(ctx.out_dir) / name).string(), content);
    }
    if (ctx.manifest) {
      cli::Manifest mf;
      mf.command = ctx.command;
      mf.args = strip_globals(args);
      mf.seed = ctx.seed;
      mf.limit_bits = ctx.limit_bits;
      mf.jobs = ctx.jobs;
      mf.cwd = fs::absolute(ctx.base_dir).string();
      mf.inputs = ctx.inputs;
      for (const auto& [name, content] : ctx.outputs) mf.outputs.push_back({name, cli::sha256_hex(content)});
      mf.rows = ctx.rows;
      mf.status = ctx.mismatch ? "mismatch" : "ok";
      std::string stem = ctx.command;
      std::replace(stem.begin(), stem.end(), ' ', '-');
      core::write_file((fs::path(ctx.out_dir) / (stem + cli::kManifestSuffix)).string(), mf.to_text());
    }
  } catch (const Error& e) {
    err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (ctx.mismatch) {
    err << "error: mismatch: verification failed\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_parsed(args, out, err);
}

}  // namespace bsmwb::tools
