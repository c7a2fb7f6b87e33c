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

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace bsmwb::core {

// Splits [0, count) into `jobs` contiguous chunks and runs fn(begin, end) on
// each, returning per-chunk results in chunk order so callers can merge
// deterministically. jobs <= 1 runs inline.
template <class Result, class Fn>
std::vector<Result> parallel_chunks(std::uint64_t count, int jobs, Fn fn) {
  const std::uint64_t chunks = std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(count, static_cast<std::uint64_t>(std::max(jobs, 1))));
  std::vector<Result> results(chunks);
  auto bounds = [&](std::uint64_t c) { return count * c / chunks; };
  if (chunks == 1) {
    results[0] = fn(std::uint64_t{0}, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    workers.emplace_back([&, c] {
      try {
        results[c] = fn(bounds(c), bounds(c + 1));
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace bsmwb::core
