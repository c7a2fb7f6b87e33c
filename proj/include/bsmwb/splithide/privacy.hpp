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
#include <string>
#include <variant>
#include <vector>

#include "bsmwb/splithide/reductions.hpp"

namespace bsmwb::splithide {

using SplitInput = std::variant<Cnf, Graph, IntMultiset>;

struct PrivacyOptions {
  std::uint64_t samples = 20000;
  std::uint64_t seed = 1;
  int jobs = 1;
  double sigmas = 4.0;  // per-statistic level before Bonferroni adjustment
};

struct FrequencyStat {
  std::string label;  // e.g. "input1/bob/index 17"
  double observed;
  double expected;
  double z;
};

struct PrivacyVerdict {
  bool passed = true;
  std::uint64_t exact_comparisons = 0;  // shared-seed output pairs compared bit-exactly
  std::uint64_t exact_mismatches = 0;
  std::uint64_t statistics = 0;
  double threshold = 0;  // Bonferroni-adjusted |z| bound
  double max_abs_z = 0;
  std::vector<FrequencyStat> failures;
};

// Draws `samples` seeds from options.seed and reduces both inputs under each.
// Input-oblivious sides (SAT alpha, 3COL A, PARTITION A) must agree bit-exactly
// across the two inputs; the remaining side is judged by per-coordinate
// frequencies of its fingerprint against the exact expected frequencies.
PrivacyVerdict check_privacy(ReductionId id, const SplitInput& first, const SplitInput& second,
                             const PrivacyOptions& options = {});

// Two-sided |z| threshold whose per-statistic tail equals that of `sigmas`
// standard errors divided across `statistics` tests.
double bonferroni_threshold(double sigmas, std::uint64_t statistics);

// Seed for sample k of a run seeded with `seed` (splitmix64 finalizer).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t k);

}  // namespace bsmwb::splithide
