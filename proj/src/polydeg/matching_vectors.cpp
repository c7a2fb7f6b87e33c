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

#include <sstream>

#include "bsmwb/core/error.hpp"
#include "bsmwb/polydeg/polydeg.hpp"

namespace bsmwb::polydeg {

bool MvFamily::in_s(std::uint32_t c) {
  for (auto s : kS) {
    if (s == c) return true;
  }
  return false;
}

std::uint32_t MvFamily::inner(const std::vector<std::uint8_t>& a,
                              const std::vector<std::uint8_t>& b) {
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<std::uint32_t>(a[i]) * b[i];
  return acc % 6;
}

MvFamily::MvFamily(int k, std::vector<std::vector<std::uint8_t>> u,
                   std::vector<std::vector<std::uint8_t>> v)
    : k_(k), u_(std::move(u)), v_(std::move(v)) {
  require(k >= 1, "dimension must be positive");
  require(u_.size() == v_.size() && !u_.empty(), "family needs equally many u and v vectors");
  for (const auto* side : {&u_, &v_}) {
    for (const auto& vec : *side) {
      require(vec.size() == static_cast<std::size_t>(k), "vector length differs from dimension");
      for (auto d : vec) require(d < 6, "vector entries must lie in Z_6");
    }
  }
  for (std::size_t i = 0; i < u_.size(); ++i) {
    for (std::size_t j = 0; j < v_.size(); ++j) {
      const auto c = inner(u_[i], v_[j]);
      if (i == j) {
        require(c == 0, "<u_i, v_i> must be 0 mod 6 (i = " + std::to_string(i + 1) + ")");
      } else {
        require(in_s(c), "<u_i, v_j> = " + std::to_string(c) + " is not in S for i = " +
                             std::to_string(i + 1) + ", j = " + std::to_string(j + 1));
      }
    }
  }
}

std::string MvFamily::to_text() const {
  std::ostringstream out;
  out << "k " << k_ << "\nsize " << u_.size() << '\n';
  for (const auto* side : {&u_, &v_}) {
    for (const auto& vec : *side) {
      out << (side == &u_ ? "u " : "v ");
      for (auto d : vec) out << int(d);
      out << '\n';
    }
  }
  return out.str();
}

MvFamily MvFamily::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  long k = -1, size = -1;
  std::vector<std::vector<std::uint8_t>> u, v;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string key, value;
    if (!(ls >> key) || key[0] == '#') continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    if (!(ls >> value)) fail(ErrorKind::kParse, where + "missing value");
    if (key == "k" || key == "size") {
      char* end = nullptr;
      long parsed = std::strtol(value.c_str(), &end, 10);
      if (*end || parsed < 1) fail(ErrorKind::kParse, where + "expected a positive integer");
      (key == "k" ? k : size) = parsed;
    } else if (key == "u" || key == "v") {
      std::vector<std::uint8_t> vec;
      for (char c : value) {
        if (c < '0' || c > '5') fail(ErrorKind::kParse, where + "vector digits must be 0..5");
        vec.push_back(static_cast<std::uint8_t>(c - '0'));
      }
      (key == "u" ? u : v).push_back(std::move(vec));
    } else {
      fail(ErrorKind::kParse, where + "unknown key '" + key + "'");
    }
  }
  if (k < 0 || size < 0) fail(ErrorKind::kParse, "family needs 'k' and 'size' lines");
  if (static_cast<long>(u.size()) != size || static_cast<long>(v.size()) != size) {
    fail(ErrorKind::kParse, "family lists a different number of vectors than 'size'");
  }
  try {
    return MvFamily(static_cast<int>(k), std::move(u), std::move(v));
  } catch (const Error& e) {
    fail(ErrorKind::kParse, std::string("invalid family: ") + e.what());
  }
}

namespace {

class MvSearch {
 public:
  MvSearch(std::size_t size, int k, const MvSearchOptions& options)
      : size_(size), k_(k), options_(options) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= 6;
    vecs_.resize(count, std::vector<std::uint8_t>(static_cast<std::size_t>(k)));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t c = idx;
      // Most significant digit first, so index order is lexicographic.
      for (int l = k - 1; l >= 0; --l) {
        vecs_[idx][static_cast<std::size_t>(l)] = static_cast<std::uint8_t>(c % 6);
        c /= 6;
      }
    }
  }

  std::optional<MvFamily> run() {
    std::vector<std::uint32_t> all(vecs_.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    if (!extend(all, all)) return std::nullopt;
    std::vector<std::vector<std::uint8_t>> u, v;
    for (auto i : chosen_u_) u.push_back(vecs_[i]);
    for (auto i : chosen_v_) v.push_back(vecs_[i]);
    return MvFamily(k_, std::move(u), std::move(v));
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint32_t ip(std::uint32_t a, std::uint32_t b) const {
    return MvFamily::inner(vecs_[a], vecs_[b]);
  }

  // du: u candidates compatible with every chosen v (and above the last u);
  // dv: v candidates compatible with every chosen u.
  bool extend(const std::vector<std::uint32_t>& du, const std::vector<std::uint32_t>& dv) {
    if (chosen_u_.size() == size_) return true;
    const std::size_t remaining = size_ - chosen_u_.size();
    if (du.size() < remaining || dv.size() < remaining) return false;
    for (auto u : du) {
      for (auto v : dv) {
        if (ip(u, v) != 0) continue;
        if (++nodes_ > options_.max_nodes) {
          fail(ErrorKind::kCapacity, "matching-vector search exceeded " +
                                         std::to_string(options_.max_nodes) + " nodes");
        }
        std::vector<std::uint32_t> nu, nv;
        for (auto c : du) {
          if (c > u && MvFamily::in_s(ip(c, v))) nu.push_back(c);
        }
        for (auto c : dv) {
          if (MvFamily::in_s(ip(u, c))) nv.push_back(c);
        }
        chosen_u_.push_back(u);
        chosen_v_.push_back(v);
        if (extend(nu, nv)) return true;
        chosen_u_.pop_back();
        chosen_v_.pop_back();
      }
    }
    return false;
  }

  std::size_t size_;
  int k_;
  MvSearchOptions options_;
  std::vector<std::vector<std::uint8_t>> vecs_;
  std::vector<std::uint32_t> chosen_u_, chosen_v_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

MvSearchResult find_mv_family(std::size_t size, int k, const MvSearchOptions& options) {
  require(size >= 1, "family size must be positive");
  require(k >= 1 && k <= 8, "dimension must lie in [1, 8]");
  MvSearch search(size, k, options);
  MvSearchResult r;
  r.family = search.run();
  r.nodes = search.nodes();
  return r;
}

std::uint8_t f4_mul(std::uint8_t a, std::uint8_t b) {
  // (a0 + a1 w)(b0 + b1 w) with w^2 = w + 1.
  const unsigned a0 = a & 1, a1 = (a >> 1) & 1, b0 = b & 1, b1 = (b >> 1) & 1;
  const unsigned hi = a1 & b1;
  const unsigned c0 = (a0 & b0) ^ hi;
  const unsigned c1 = (a0 & b1) ^ (a1 & b0) ^ hi;
  return static_cast<std::uint8_t>(c0 | (c1 << 1));
}

std::uint8_t mv_q(std::uint32_t c) {
  return static_cast<std::uint8_t>((c % 2) | ((c % 3 != 0 ? 1u : 0u) << 1));
}

std::uint8_t mv_predicate(std::uint32_t c) {
  const std::uint8_t q = mv_q(c);
  return f4_mul(f4_mul(q, q), q) ^ 1;
}

BsmProtocol mv_equality_protocol(const MvFamily& family) {
  const std::size_t size = family.size();
  require(size >= 2 && (size & (size - 1)) == 0, "family size must be a power of two >= 2");
  int n = 0;
  while ((std::size_t{1} << n) < size) ++n;
  const auto k = static_cast<std::uint32_t>(family.dimension());
  ModularPolynomial p(6, 2 * k);
  for (std::uint32_t i = 0; i < k; ++i) p.add_term({i, k + i}, 1);
  std::vector<std::uint8_t> predicate(6);
  for (std::uint32_t c = 0; c < 6; ++c) predicate[c] = mv_predicate(c);
  return BsmProtocol::from_maps(
      n, 6, [&](std::uint64_t x) { return family.u()[x]; },
      [&](std::uint64_t y) { return family.v()[y]; },
      core::CarolEvaluator::polynomial(std::move(p), std::move(predicate)));
}

}  // namespace bsmwb::polydeg
