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

#include "bsmwb/dovetail/dovetail.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "bsmwb/core/error.hpp"

namespace bsmwb::dovetail {

bool is_bit_string(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

SemiDecider equality_language() {
  SemiDecider m;
  m.name = "eq";
  m.accepts = [](const std::string& x, const std::string& y, std::uint64_t k) {
    return x == y && k >= x.size() + y.size() + 1;
  };
  m.certified_budget = [](int n) { return static_cast<std::uint64_t>(2 * n + 1); };
  m.member = [](const std::string& x, const std::string& y) { return x == y; };
  return m;
}

SemiDecider prefix_language() {
  SemiDecider m;
  m.name = "prefix";
  m.accepts = [](const std::string& x, const std::string& y, std::uint64_t k) {
    if (y.size() > x.size() || x.compare(0, y.size(), y) != 0) return false;
    return k >= y.size() + static_cast<std::uint64_t>(std::count(x.begin(), x.end(), '1')) + 1;
  };
  m.certified_budget = [](int n) { return static_cast<std::uint64_t>(2 * n + 1); };
  m.member = [](const std::string& x, const std::string& y) {
    return y.size() <= x.size() && x.compare(0, y.size(), y) == 0;
  };
  return m;
}

SemiDecider table_language(const std::string& text, const std::string& name) {
  auto accepted = std::make_shared<std::map<std::pair<std::string, std::string>, std::uint64_t>>();
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  std::uint64_t worst = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string x, y, steps, extra;
    if (!(ls >> x)) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!(ls >> y >> steps) || (ls >> extra)) fail(ErrorKind::kParse, where + "expected `X Y STEPS`");
    if (x == "-") x.clear();
    if (y == "-") y.clear();
    if (!is_bit_string(x) || !is_bit_string(y)) fail(ErrorKind::kParse, where + "X and Y must be bit strings or '-'");
    if (x.size() > kDeskLimit || y.size() > kDeskLimit) {
      fail(ErrorKind::kParse, where + "strings longer than " + std::to_string(kDeskLimit));
    }
    std::uint64_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoull(steps, &used);
      if (used != steps.size() || k == 0 || k > 1'000'000) throw std::invalid_argument("range");
    } catch (const std::exception&) {
      fail(ErrorKind::kParse, where + "STEPS must be an integer in [1, 1000000]");
    }
    if (!accepted->emplace(std::make_pair(x, y), k).second) {
      fail(ErrorKind::kParse, where + "duplicate pair");
    }
    worst = std::max(worst, k);
  }
  SemiDecider m;
  m.name = name;
  m.accepts = [accepted](const std::string& x, const std::string& y, std::uint64_t k) {
    auto it = accepted->find({x, y});
    return it != accepted->end() && k >= it->second;
  };
  m.certified_budget = [worst](int) { return worst; };
  m.member = [accepted](const std::string& x, const std::string& y) {
    return accepted->count({x, y}) != 0;
  };
  return m;
}

SemiDecider language_by_name(const std::string& name) {
  if (name == "eq") return equality_language();
  if (name == "prefix") return prefix_language();
  fail(ErrorKind::kRejected, "unknown language '" + name + "' (expected eq or prefix)");
}

std::string CountMessage::to_bits() const {
  const std::size_t n = input.size();
  std::string out = input;
  for (std::size_t i = 0; i <= n; ++i) out += ((count >> (n - i)) & 1) ? '1' : '0';
  return out;
}

CountMessage CountMessage::from_bits(const std::string& bits) {
  if (bits.size() % 2 != 1 || !is_bit_string(bits)) {
    fail(ErrorKind::kParse, "count message must be an odd-length bit string");
  }
  const std::size_t n = bits.size() / 2;
  CountMessage m;
  m.input = bits.substr(0, n);
  for (std::size_t i = n; i < bits.size(); ++i) m.count = (m.count << 1) | (bits[i] == '1');
  return m;
}

std::vector<std::string> shortlex_up_to(int n) {
  std::vector<std::string> out{""};
  for (int len = 1; len <= n; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      std::string s(len, '0');
      for (int i = 0; i < len; ++i) s[i] = ((v >> (len - 1 - i)) & 1) ? '1' : '0';
      out.push_back(std::move(s));
    }
  }
  return out;
}

namespace {

void check_input(const std::string& s) {
  require(is_bit_string(s), "input must be a bit string");
  require(s.size() <= kDeskLimit, "input longer than the desk limit of " + std::to_string(kDeskLimit));
}

// side_alice: fix x = s and count partners y'; otherwise fix y = s.
CountMessage preprocess(const std::string& s, const SemiDecider& machine, bool side_alice) {
  check_input(s);
  const int n = static_cast<int>(s.size());
  const std::uint64_t k = machine.certified_budget(n);
  CountMessage m{s, 0};
  for (const auto& p : shortlex_up_to(n)) {
    const bool hit = side_alice ? machine.accepts(s, p, k) : machine.accepts(p, s, k);
    if (machine.member) {
      const bool truth = side_alice ? machine.member(s, p) : machine.member(p, s);
      if (truth != hit) {
        fail(ErrorKind::kCapacity, "preprocessing budget " + std::to_string(k) +
                                       " is insufficient for language " + machine.name);
      }
    }
    m.count += hit;
  }
  return m;
}

}  // namespace

CountMessage alice_message(const std::string& x, const SemiDecider& machine) {
  return preprocess(x, machine, true);
}

CountMessage bob_message(const std::string& y, const SemiDecider& machine) {
  return preprocess(y, machine, false);
}

std::string DovetailResult::trace_csv() const {
  std::ostringstream os;
  os << "sweep,budget,x,y,event\n";
  for (const auto& r : trace) {
    os << r.sweep << ',' << r.budget << ',' << r.x << ',' << r.y << ','
       << (r.accepted ? "accepted" : "running") << '\n';
  }
  return os.str();
}

DovetailResult carol_dovetail(const CountMessage& a, const CountMessage& b,
                              const SemiDecider& machine, const DovetailOptions& options) {
  check_input(a.input);
  check_input(b.input);
  const std::string& x = a.input;
  const std::string& y = b.input;
  DovetailResult res;
  res.used_alice = y.size() <= x.size();
  const std::string& fixed = res.used_alice ? x : y;
  const std::uint64_t target = res.used_alice ? a.count : b.count;
  const int n = static_cast<int>(fixed.size());
  require(target < (std::uint64_t{2} << n), "count does not fit in n + 1 bits");
  if (target == 0) return res;

  const auto partners = shortlex_up_to(n);
  std::vector<std::uint8_t> done(partners.size(), 0);
  const std::uint64_t certified = machine.certified_budget(n);
  for (std::uint64_t k = 1;; ++k) {
    if (k > certified) {
      fail(ErrorKind::kIntegrity, "count " + std::to_string(target) +
                                      " unreachable within the certified budget " +
                                      std::to_string(certified));
    }
    ++res.sweeps;
    for (std::size_t i = 0; i < partners.size(); ++i) {
      if (done[i]) continue;
      const std::string& px = res.used_alice ? x : partners[i];
      const std::string& py = res.used_alice ? partners[i] : y;
      res.steps += 1;
      if (res.steps > options.step_ceiling) fail(ErrorKind::kCapacity, "dovetail step ceiling hit");
      const bool ok = machine.accepts(px, py, k);
      if (options.trace) res.trace.push_back({k, k, px, py, ok});
      if (!ok) continue;
      done[i] = 1;
      ++res.accepted_found;
      if (px == x && py == y) res.accept = true;
      if (res.accepted_found == target) return res;
    }
  }
}

}  // namespace bsmwb::dovetail
