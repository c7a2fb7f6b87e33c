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
#include <bit>
#include <cmath>
#include <sstream>

#include "bsmwb/combine/combine.hpp"
#include "bsmwb/core/error.hpp"
#include "bsmwb/core/parallel.hpp"

namespace bsmwb::combine {

namespace {

// Masks of popcount <= r, i.e. the offsets of a radius-r ball.
std::vector<std::uint64_t> ball_offsets(int n, int r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) <= r) out.push_back(m);
  }
  return out;
}

}  // namespace

bool CoveringCode::covers() const {
  require(n >= 0 && n <= 20, "coverage check supports n <= 20");
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint8_t> hit(size, 0);
  const auto ball = ball_offsets(n, r);
  for (auto c : codewords) {
    for (auto o : ball) hit[(c ^ o) & (size - 1)] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](std::uint8_t h) { return h != 0; });
}

std::string CoveringCode::to_text() const {
  std::ostringstream os;
  os << n << ' ' << r << '\n';
  for (auto c : codewords) {
    for (int i = 0; i < n; ++i) os << (((c >> i) & 1) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

CoveringCode CoveringCode::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  CoveringCode code;
  bool header = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!header) {
      std::istringstream hs(line);
      std::string extra;
      if (!(hs >> code.n >> code.r) || (hs >> extra)) {
        fail(ErrorKind::kParse, where + "expected header \"n r\"");
      }
      if (code.n < 1 || code.n > 20 || code.r < 0 || code.r > code.n) {
        fail(ErrorKind::kParse, where + "header values out of range");
      }
      header = true;
      continue;
    }
    if (static_cast<int>(line.size()) != code.n) {
      fail(ErrorKind::kParse, where + "codeword length differs from n");
    }
    std::uint64_t w = 0;
    for (int i = 0; i < code.n; ++i) {
      if (line[i] != '0' && line[i] != '1') {
        fail(ErrorKind::kParse, where + "column " + std::to_string(i + 1) + ": expected 0 or 1");
      }
      if (line[i] == '1') w |= std::uint64_t{1} << i;
    }
    code.codewords.push_back(w);
  }
  if (!header) fail(ErrorKind::kParse, "missing \"n r\" header");
  return code;
}

// Gains are kept incrementally: covering point p lowers the gain of every
// candidate within distance r of p.
CoveringCode greedy_covering_code(int n, int r) {
  require(n >= 1 && n <= 16, "greedy covering supports 1 <= n <= 16");
  require(r >= 0 && r <= n, "radius must lie in [0, n]");
  const std::uint64_t size = std::uint64_t{1} << n;
  const auto ball = ball_offsets(n, r);
  std::vector<std::uint32_t> gain(size, static_cast<std::uint32_t>(ball.size()));
  std::vector<std::uint8_t> covered(size, 0);
  std::uint64_t remaining = size;
  CoveringCode code{n, r, {}};
  while (remaining > 0) {
    // Lowest word wins ties.
    const std::uint64_t best = static_cast<std::uint64_t>(
        std::max_element(gain.begin(), gain.end()) - gain.begin());
    code.codewords.push_back(best);
    for (auto o : ball) {
      const std::uint64_t p = best ^ o;
      if (covered[p]) continue;
      covered[p] = 1;
      --remaining;
      for (auto o2 : ball) --gain[p ^ o2];
    }
  }
  return code;
}

int default_covering_radius(int n) {
  const long double r = (1.0L - 1.0L / std::sqrt(2.0L)) * n;
  return static_cast<int>(std::ceil(r - 1e-12L));
}

Dnf covering_slice(const TruthTable& g, std::uint64_t center, int j) {
  const int n = g.arity();
  std::vector<Term> terms;
  for (std::uint64_t s = 0; s < g.size(); ++s) {
    if (std::popcount(s) != j || !g[center ^ s]) continue;
    terms.push_back({s & ~center, s & center});
  }
  return Dnf(n, std::move(terms));
}

namespace {

using Wire = BooleanCircuit::Wire;

// Wires that may be compile-time constants, so the distance DP does not pay
// for gates on its constant frontier.
struct Bit {
  Wire wire = 0;
  int known = -1;  // -1 unknown, else the constant value
};

Bit bit_and(BooleanCircuit& c, Bit a, Bit b) {
  if (a.known == 0 || b.known == 0) return {0, 0};
  if (a.known == 1) return b;
  if (b.known == 1) return a;
  return {c.add_and({a.wire, b.wire}), -1};
}

Bit bit_or(BooleanCircuit& c, Bit a, Bit b) {
  if (a.known == 1 || b.known == 1) return {0, 1};
  if (a.known == 0) return b;
  if (b.known == 0) return a;
  return {c.add_or({a.wire, b.wire}), -1};
}

Wire materialize(BooleanCircuit& c, Bit b) {
  return b.known < 0 ? b.wire : c.constant(b.known == 1);
}

Wire attach_covering(ProtocolBuilder& b, const TruthTable& g, const CoveringCode& code,
                     int jobs) {
  const int n = g.arity();
  require(code.n == n, "code length differs from the function arity");
  require(code.covers(), "code does not cover the cube");
  const int r = code.r;
  const std::size_t m = code.codewords.size();

  // Slices are independent; build them in parallel, attach in order.
  const std::size_t count = m * (r + 1);
  auto chunks = core::parallel_chunks<std::vector<Dnf>>(
      count, jobs, [&](std::size_t begin, std::size_t end) {
        std::vector<Dnf> out;
        for (std::size_t k = begin; k < end; ++k) {
          out.push_back(covering_slice(g, code.codewords[k / (r + 1)],
                                       static_cast<int>(k % (r + 1))));
        }
        return out;
      });
  std::vector<Wire> sub;
  for (const auto& chunk : chunks) {
    for (const auto& d : chunk) sub.push_back(attach_width_engine(b, d));
  }

  auto& c = b.carol();
  const auto z = b.or_inputs();
  std::vector<Wire> not_z(n);
  for (int k = 0; k < n; ++k) not_z[k] = c.add_not(z[k]);

  // exact[i][j] = [d(z, c_i) = j] for j <= r.
  std::vector<std::vector<Bit>> exact(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Bit> cnt(r + 1, Bit{0, 0});
    cnt[0] = {0, 1};
    for (int k = 0; k < n; ++k) {
      const bool ck = (code.codewords[i] >> k) & 1;
      const Bit u{ck ? not_z[k] : z[k], -1};
      const Bit nu{ck ? z[k] : not_z[k], -1};
      std::vector<Bit> next(r + 1);
      for (int d = 0; d <= r; ++d) {
        Bit stay = bit_and(c, cnt[d], nu);
        Bit step = d > 0 ? bit_and(c, cnt[d - 1], u) : Bit{0, 0};
        next[d] = bit_or(c, stay, step);
      }
      cnt = std::move(next);
    }
    exact[i] = std::move(cnt);
  }

  // Nearest codeword first, lowest index among equals: scan (j, i) and let
  // a prefix OR mask everything after the first hit.
  std::vector<Wire> picks;
  Bit before{0, 0};
  for (int j = 0; j <= r; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      const Bit e = exact[i][j];
      Bit sel = e;
      if (before.known != 0) {
        const Bit not_before =
            before.known == 1 ? Bit{0, 0} : Bit{c.add_not(before.wire), -1};
        sel = bit_and(c, e, not_before);
      }
      const Bit hit = bit_and(c, sel, Bit{sub[i * (r + 1) + j], -1});
      if (hit.known != 0) picks.push_back(materialize(c, hit));
      before = bit_or(c, before, e);
    }
  }
  return c.add_or(std::move(picks));
}

}  // namespace

BsmProtocol covering_code_protocol_or(const TruthTable& g, const CoveringCode& code,
                                      const CoveringProtocolOptions& options) {
  ProtocolBuilder b(g.arity());
  auto out = attach_covering(b, g, code, options.jobs);
  return std::move(b).build(out);
}

CoveringSizeEstimate covering_code_size(const TruthTable& g, const CoveringCode& code) {
  ProtocolBuilder b(g.arity());
  auto out = attach_covering(b, g, code, 1);
  b.carol().set_output(out);
  return {b.alice_length(), b.bob_length(), b.carol().gate_count()};
}

}  // namespace bsmwb::combine
