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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bsmwb::dovetail {

// Bit strings are std::string over {'0','1'}; the empty string is allowed.
bool is_bit_string(const std::string& s);

// A machine on pairs (x, y) that halts on members only. accepts(x, y, k)
// reports whether it has accepted within k steps; once true it stays true
// for larger k.
struct SemiDecider {
  std::string name;
  std::function<bool(const std::string& x, const std::string& y, std::uint64_t budget)> accepts;
  // Step budget after which no pair with both sides of length <= n can still
  // accept. This is what makes the demo languages decidable for the
  // preprocessing parties.
  std::function<std::uint64_t(int n)> certified_budget;
  // Ground-truth membership, when known; preprocessing cross-checks it.
  std::function<bool(const std::string& x, const std::string& y)> member;
};

// x = y; accepts after |x| + |y| + 1 steps.
SemiDecider equality_language();
// y is a prefix of x; accepts after |y| + (number of ones in x) + 1 steps.
SemiDecider prefix_language();
// Explicit list of accepted pairs with their halting step. Text format, one
// pair per line: `X Y STEPS`, where '-' denotes the empty string; '#' starts
// a comment.
SemiDecider table_language(const std::string& text, const std::string& name = "custom");

inline constexpr int kDeskLimit = 6;

// x followed by the (n+1)-bit big-endian count: 2n + 1 bits.
struct CountMessage {
  std::string input;
  std::uint64_t count = 0;

  std::string to_bits() const;
  static CountMessage from_bits(const std::string& bits);
};

// All strings of length <= n in shortlex order.
std::vector<std::string> shortlex_up_to(int n);

// count = |{y' : |y'| <= |x|, (x, y') in L}|, decided at the certified
// budget. Refuses when that disagrees with the ground truth.
CountMessage alice_message(const std::string& x, const SemiDecider& machine);
CountMessage bob_message(const std::string& y, const SemiDecider& machine);

struct TraceRow {
  std::uint64_t sweep;
  std::uint64_t budget;
  std::string x;
  std::string y;
  bool accepted;  // accepted during this sweep
};

struct DovetailOptions {
  bool trace = false;
  std::uint64_t step_ceiling = std::uint64_t{1} << 32;  // total simulated steps
};

struct DovetailResult {
  bool accept = false;
  bool used_alice = true;  // whose count drove the search
  std::uint64_t sweeps = 0;
  std::uint64_t steps = 0;  // sum of budgets granted
  std::uint64_t accepted_found = 0;
  std::vector<TraceRow> trace;

  std::string trace_csv() const;
};

// When |y| <= |x| Carol dovetails over (x, y') with |y'| <= |x| against
// Alice's count; otherwise over (x', y) with |x'| <= |y| against Bob's.
// Each sweep grants every still-running candidate one more step, candidates
// in shortlex order. Stops once the count is reached and accepts iff (x, y)
// is among the accepted pairs.
DovetailResult carol_dovetail(const CountMessage& a, const CountMessage& b,
                              const SemiDecider& machine, const DovetailOptions& options = {});

SemiDecider language_by_name(const std::string& name);

}  // namespace bsmwb::dovetail
