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
#include <random>
#include <vector>

namespace bsmwb::core {

// Seedable, splittable generator. The engine is std::mt19937_64 (fully
// specified by the standard); bounded draws use Lemire's multiply-shift
// rejection so the stream is identical on every platform, which the
// standard distributions do not promise.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  bool coin() { return (next() >> 63) != 0; }

  // Independent child stream; advances this generator by one draw.
  Rng split() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

  // Fisher-Yates shuffle of 0..n-1.
  std::vector<std::uint32_t> permutation(std::uint32_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace bsmwb::core
