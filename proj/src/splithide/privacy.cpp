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

#include "bsmwb/splithide/privacy.hpp"

#include <cmath>
#include <cstdlib>

#include "bsmwb/core/error.hpp"
#include "bsmwb/core/parallel.hpp"

namespace bsmwb::splithide {

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double bonferroni_threshold(double sigmas, std::uint64_t statistics) {
  auto two_sided_tail = [](double z) { return std::erfc(z / std::sqrt(2.0)); };
  const double per_test = two_sided_tail(sigmas) / static_cast<double>(std::max<std::uint64_t>(statistics, 1));
  double lo = 0, hi = 40;
  for (int it = 0; it < 200; ++it) {
    double mid = (lo + hi) / 2;
    (two_sided_tail(mid) > per_test ? lo : hi) = mid;
  }
  return hi;
}

namespace {

constexpr int kBuckets = 16;

// Per-sample tallies: inclusion counts for index-subset fingerprints, or
// bucket counts (coordinate-major) for value-vector fingerprints.
struct Tally {
  std::uint64_t exact = 0;
  std::uint64_t exact_mismatches = 0;
  std::vector<std::uint64_t> first;
  std::vector<std::uint64_t> second;
  std::vector<std::uint64_t> oblivious;  // partition y buckets, shared by both inputs
};

int parameter_of(ReductionId id, const SplitInput& in) {
  switch (id) {
    case ReductionId::kSat:
      require(std::holds_alternative<Cnf>(in), "SAT reduction needs CNF inputs");
      return std::get<Cnf>(in).variable_count();
    case ReductionId::k3Col:
      require(std::holds_alternative<Graph>(in), "3COL reduction needs graph inputs");
      return static_cast<int>(std::get<Graph>(in).vertices().size());
    case ReductionId::kPartition:
      require(std::holds_alternative<IntMultiset>(in), "PARTITION reduction needs multiset inputs");
      return static_cast<int>(std::get<IntMultiset>(in).elements.size());
  }
  return -1;
}

std::uint64_t bucket_of(std::uint64_t v, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) * kBuckets / p);
}

void add_all(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  if (into.empty()) into.assign(from.size(), 0);
  for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

}  // namespace

PrivacyVerdict check_privacy(ReductionId id, const SplitInput& first, const SplitInput& second,
                             const PrivacyOptions& options) {
  const int n = parameter_of(id, first);
  require(n == parameter_of(id, second), "privacy inputs must share the length parameter n");
  require(options.samples > 0, "sample count must be positive");

  std::uint64_t coords = 0;  // size of one input's tally vector
  std::uint64_t p = 0;
  if (id == ReductionId::kSat) {
    coords = 2 * clause_count(n);
  } else if (id == ReductionId::k3Col) {
    coords = static_cast<std::uint64_t>(n) * (n - 1);
  } else {
    p = static_cast<std::uint64_t>(partition_modulus(n));
    coords = static_cast<std::uint64_t>(n) * kBuckets;
  }

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    Tally t;
    t.first.assign(coords, 0);
    t.second.assign(coords, 0);
    if (id == ReductionId::kPartition) t.oblivious.assign(coords, 0);
    for (std::uint64_t k = begin; k < end; ++k) {
      const std::uint64_t s = sample_seed(options.seed, k);
      ++t.exact;
      if (id == ReductionId::kSat) {
        auto a = reduce_sat(std::get<Cnf>(first), s);
        auto b = reduce_sat(std::get<Cnf>(second), s);
        if (!(a.alice_part == b.alice_part)) ++t.exact_mismatches;
        for (const auto* out : {&a, &b}) {
          auto& tally = out == &a ? t.first : t.second;
          for (const auto& c : out->bob_part.clauses()) {
            tally[static_cast<std::uint64_t>(std::abs(c.at(0)) - n - 1)]++;
          }
        }
      } else if (id == ReductionId::k3Col) {
        auto a = reduce_3col(std::get<Graph>(first), s);
        auto b = reduce_3col(std::get<Graph>(second), s);
        if (!(a.alice_part == b.alice_part)) ++t.exact_mismatches;
        for (const auto* out : {&a, &b}) {
          auto& tally = out == &a ? t.first : t.second;
          for (auto [u, v] : out->bob_part.edges()) {
            (void)v;
            tally[(u - static_cast<std::uint32_t>(n) - 1) / 6]++;
          }
        }
      } else {
        auto a = reduce_partition(std::get<IntMultiset>(first), s);
        auto b = reduce_partition(std::get<IntMultiset>(second), s);
        if (!(a.alice_part == b.alice_part)) ++t.exact_mismatches;
        const int shift = 3 * n;
        for (int i = 0; i < n; ++i) {
          const auto y = static_cast<std::uint64_t>(a.alice_part.elements[static_cast<std::size_t>(i)] >> shift);
          t.oblivious[static_cast<std::uint64_t>(i) * kBuckets + bucket_of(y, p)]++;
          const auto za = static_cast<std::uint64_t>(a.bob_part.elements[static_cast<std::size_t>(i)] >> shift);
          const auto zb = static_cast<std::uint64_t>(b.bob_part.elements[static_cast<std::size_t>(i)] >> shift);
          t.first[static_cast<std::uint64_t>(i) * kBuckets + bucket_of(za, p)]++;
          t.second[static_cast<std::uint64_t>(i) * kBuckets + bucket_of(zb, p)]++;
        }
      }
    }
    return t;
  };

  auto chunks = core::parallel_chunks<Tally>(options.samples, options.jobs, run);
  Tally total;
  for (const auto& c : chunks) {
    total.exact += c.exact;
    total.exact_mismatches += c.exact_mismatches;
    add_all(total.first, c.first);
    add_all(total.second, c.second);
    if (!c.oblivious.empty()) add_all(total.oblivious, c.oblivious);
  }

  // Exact per-coordinate expectations.
  std::vector<double> expected(coords);
  if (id == ReductionId::kPartition) {
    for (std::uint64_t b = 0; b < kBuckets; ++b) {
      // |{v < p : floor(16 v / p) = b}| = ceil((b+1)p/16) - ceil(b p/16)
      auto lo = (b * p + kBuckets - 1) / kBuckets;
      auto hi = ((b + 1) * p + kBuckets - 1) / kBuckets;
      for (int i = 0; i < n; ++i) {
        expected[static_cast<std::uint64_t>(i) * kBuckets + b] =
            static_cast<double>(hi - lo) / static_cast<double>(p);
      }
    }
  } else {
    std::fill(expected.begin(), expected.end(), 0.5);
  }

  PrivacyVerdict v;
  v.exact_comparisons = total.exact;
  v.exact_mismatches = total.exact_mismatches;
  std::vector<std::pair<std::string, const std::vector<std::uint64_t>*>> groups = {
      {"input1/bob", &total.first}, {"input2/bob", &total.second}};
  if (!total.oblivious.empty()) groups.push_back({"alice", &total.oblivious});
  v.statistics = coords * groups.size();
  v.threshold = bonferroni_threshold(options.sigmas, v.statistics);
  const double k = static_cast<double>(options.samples);
  for (const auto& [label, counts] : groups) {
    for (std::uint64_t c = 0; c < coords; ++c) {
      const double q = expected[c];
      const double sd = std::sqrt(k * q * (1 - q));
      const double z = sd > 0 ? (static_cast<double>((*counts)[c]) - k * q) / sd : 0.0;
      v.max_abs_z = std::max(v.max_abs_z, std::fabs(z));
      if (std::fabs(z) > v.threshold) {
        v.failures.push_back({label + " coordinate " + std::to_string(c),
                              static_cast<double>((*counts)[c]) / k, q, z});
      }
    }
  }
  v.passed = v.exact_mismatches == 0 && v.failures.empty();
  return v;
}

}  // namespace bsmwb::splithide
