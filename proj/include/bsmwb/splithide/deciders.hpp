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

#include "bsmwb/splithide/instances.hpp"

namespace bsmwb::splithide {

// Search budgets. Exceeding one is a capacity error, never a guess.
struct SearchLimits {
  std::uint64_t max_nodes = 50'000'000;
  std::size_t max_partition_elements = 48;
};

// DPLL with unit propagation and the pure-literal rule.
bool decide_sat(const Cnf& f, const SearchLimits& limits = {});
// Backtracking over vertices in saturation order; a vertex left with one
// color is assigned before any branching.
bool decide_3col(const Graph& g, const SearchLimits& limits = {});
// Subset-sum to half the total: full enumeration up to 24 elements,
// meet-in-the-middle above.
bool decide_partition(const IntMultiset& s, const SearchLimits& limits = {});

// Plain enumeration, for cross-checking the deciders on small instances.
bool naive_sat(const Cnf& f);          // <= 20 variables
bool naive_3col(const Graph& g);       // <= 12 vertices
bool naive_partition(const IntMultiset& s);  // <= 20 elements

}  // namespace bsmwb::splithide
