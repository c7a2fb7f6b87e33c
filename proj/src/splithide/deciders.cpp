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

#include "bsmwb/splithide/deciders.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>

#include "bsmwb/core/error.hpp"

namespace bsmwb::splithide {

namespace {

class Dpll {
 public:
  Dpll(const Cnf& f, const SearchLimits& limits)
      : f_(f), limits_(limits), value_(static_cast<std::size_t>(f.variable_count()) + 1, 0) {}

  bool solve() {
    for (const auto& c : f_.clauses()) {
      if (c.empty()) return false;
    }
    return search();
  }

 private:
  // 0 unassigned, 1 true, 2 false.
  int lit_state(int lit) const {
    int v = value_[static_cast<std::size_t>(std::abs(lit))];
    if (v == 0) return 0;
    return ((v == 1) == (lit > 0)) ? 1 : 2;
  }

  void assign(int lit) {
    value_[static_cast<std::size_t>(std::abs(lit))] = lit > 0 ? 1 : 2;
    trail_.push_back(std::abs(lit));
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[static_cast<std::size_t>(trail_.back())] = 0;
      trail_.pop_back();
    }
  }

  // Returns false on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : f_.clauses()) {
        int unassigned = 0, last = 0;
        bool sat = false;
        for (int lit : c) {
          int s = lit_state(lit);
          if (s == 1) {
            sat = true;
            break;
          }
          if (s == 0) {
            ++unassigned;
            last = lit;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          assign(last);
          changed = true;
        }
      }
      if (!changed) changed = assign_pure();
    }
    return true;
  }

  bool assign_pure() {
    std::vector<std::uint8_t> polarity(value_.size(), 0);  // bit0 positive, bit1 negative
    for (const auto& c : f_.clauses()) {
      bool sat = false;
      for (int lit : c) {
        if (lit_state(lit) == 1) {
          sat = true;
          break;
        }
      }
      if (sat) continue;
      for (int lit : c) {
        if (lit_state(lit) == 0) polarity[static_cast<std::size_t>(std::abs(lit))] |= lit > 0 ? 1 : 2;
      }
    }
    bool any = false;
    for (std::size_t v = 1; v < value_.size(); ++v) {
      if (value_[v] == 0 && (polarity[v] == 1 || polarity[v] == 2)) {
        assign(polarity[v] == 1 ? static_cast<int>(v) : -static_cast<int>(v));
        any = true;
      }
    }
    return any;
  }

  std::optional<int> pick_branch() const {
    // Variable occurring most often in unsatisfied clauses; lowest index wins ties.
    std::map<int, std::size_t> score;
    for (const auto& c : f_.clauses()) {
      bool sat = false;
      for (int lit : c) {
        if (lit_state(lit) == 1) {
          sat = true;
          break;
        }
      }
      if (sat) continue;
      for (int lit : c) {
        if (lit_state(lit) == 0) ++score[lit];
      }
    }
    std::optional<int> best;
    std::size_t best_score = 0;
    for (auto [lit, s] : score) {
      if (s > best_score || (s == best_score && best && std::abs(lit) < std::abs(*best))) {
        best = lit;
        best_score = s;
      }
    }
    return best;
  }

  bool search() {
    if (++nodes_ > limits_.max_nodes) {
      fail(ErrorKind::kCapacity, "SAT search exceeded " + std::to_string(limits_.max_nodes) +
                                     " nodes");
    }
    const std::size_t mark = trail_.size();
    if (!propagate()) {
      undo(mark);
      return false;
    }
    auto branch = pick_branch();
    if (!branch) return true;  // every clause satisfied
    for (int lit : {*branch, -*branch}) {
      const std::size_t inner = trail_.size();
      assign(lit);
      if (search()) return true;
      undo(inner);
    }
    undo(mark);
    return false;
  }

  const Cnf& f_;
  SearchLimits limits_;
  std::vector<int> value_;
  std::vector<int> trail_;
  std::uint64_t nodes_ = 0;
};

class Colorer {
 public:
  Colorer(const Graph& g, const SearchLimits& limits) : limits_(limits) {
    std::map<std::uint32_t, std::size_t> index;
    for (auto v : g.vertices()) {
      index.emplace(v, index.size());
    }
    adj_.resize(index.size());
    for (auto [u, v] : g.edges()) {
      adj_[index[u]].push_back(index[v]);
      adj_[index[v]].push_back(index[u]);
    }
    color_.assign(index.size(), -1);
  }

  bool solve() { return search(); }

 private:
  unsigned allowed(std::size_t v) const {
    unsigned mask = 7;
    for (auto w : adj_[v]) {
      if (color_[w] >= 0) mask &= ~(1u << color_[w]);
    }
    return mask;
  }

  bool search() {
    if (++nodes_ > limits_.max_nodes) {
      fail(ErrorKind::kCapacity, "3-coloring search exceeded " +
                                     std::to_string(limits_.max_nodes) + " nodes");
    }
    std::vector<std::size_t> forced_here;
    // Forced moves: color every vertex that has exactly one option left.
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t v = 0; v < color_.size(); ++v) {
        if (color_[v] >= 0) continue;
        unsigned m = allowed(v);
        if (m == 0) {
          for (auto f : forced_here) color_[f] = -1;
          return false;
        }
        if ((m & (m - 1)) == 0) {
          color_[v] = __builtin_ctz(m);
          forced_here.push_back(v);
          progress = true;
        }
      }
    }
    // Branch on the uncolored vertex with fewest options, then most neighbors.
    std::optional<std::size_t> pick;
    int best_opts = 4;
    std::size_t best_deg = 0;
    for (std::size_t v = 0; v < color_.size(); ++v) {
      if (color_[v] >= 0) continue;
      int opts = __builtin_popcount(allowed(v));
      if (opts < best_opts || (opts == best_opts && adj_[v].size() > best_deg)) {
        pick = v;
        best_opts = opts;
        best_deg = adj_[v].size();
      }
    }
    if (!pick) return true;
    unsigned m = allowed(*pick);
    for (int c = 0; c < 3; ++c) {
      if (!(m & (1u << c))) continue;
      color_[*pick] = c;
      if (search()) return true;
    }
    color_[*pick] = -1;
    for (auto f : forced_here) color_[f] = -1;
    return false;
  }

  SearchLimits limits_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> color_;
  std::uint64_t nodes_ = 0;
};

template <class T>
std::vector<T> subset_sums(const std::vector<T>& v) {
  std::vector<T> sums{T(0)};
  for (const auto& x : v) {
    const std::size_t k = sums.size();
    for (std::size_t i = 0; i < k; ++i) sums.push_back(sums[i] + x);
  }
  return sums;
}

template <class T>
bool has_subset_sum(const std::vector<T>& v, const T& target) {
  if (v.size() <= 24) {
    for (const auto& s : subset_sums(v)) {
      if (s == target) return true;
    }
    return false;
  }
  const std::size_t half = v.size() / 2;
  std::vector<T> left(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<T> right(v.begin() + static_cast<std::ptrdiff_t>(half), v.end());
  auto ls = subset_sums(left);
  auto rs = subset_sums(right);
  std::sort(rs.begin(), rs.end());
  for (const auto& s : ls) {
    if (s > target) continue;
    if (std::binary_search(rs.begin(), rs.end(), T(target - s))) return true;
  }
  return false;
}

}  // namespace

bool decide_sat(const Cnf& f, const SearchLimits& limits) { return Dpll(f, limits).solve(); }

bool decide_3col(const Graph& g, const SearchLimits& limits) {
  return Colorer(g, limits).solve();
}

bool decide_partition(const IntMultiset& s, const SearchLimits& limits) {
  if (s.elements.size() > limits.max_partition_elements) {
    fail(ErrorKind::kCapacity, "partition instance has " + std::to_string(s.elements.size()) +
                                   " elements, limit is " +
                                   std::to_string(limits.max_partition_elements));
  }
  BigInt total = 0;
  for (const auto& v : s.elements) {
    require(v >= 0, "partition elements must be non-negative");
    total += v;
  }
  if (total % 2 != 0) return false;
  const BigInt target = total / 2;
  // Machine words suffice whenever the total does.
  if (total < (BigInt(1) << 62)) {
    std::vector<std::uint64_t> v;
    for (const auto& e : s.elements) v.push_back(static_cast<std::uint64_t>(e));
    return has_subset_sum(v, static_cast<std::uint64_t>(target));
  }
  return has_subset_sum(s.elements, target);
}

bool naive_sat(const Cnf& f) {
  require(f.variable_count() <= 20, "naive SAT limited to 20 variables");
  const std::uint64_t count = std::uint64_t{1} << f.variable_count();
  std::vector<std::uint8_t> a(static_cast<std::size_t>(f.variable_count()) + 1, 0);
  for (std::uint64_t m = 0; m < count; ++m) {
    for (int v = 1; v <= f.variable_count(); ++v) a[static_cast<std::size_t>(v)] = (m >> (v - 1)) & 1;
    if (f.satisfied_by(a)) return true;
  }
  return false;
}

bool naive_3col(const Graph& g) {
  require(g.vertices().size() <= 12, "naive 3-coloring limited to 12 vertices");
  std::vector<std::uint32_t> verts(g.vertices().begin(), g.vertices().end());
  std::map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < verts.size(); ++i) total *= 3;
  std::vector<int> color(verts.size());
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& col : color) {
      col = static_cast<int>(c % 3);
      c /= 3;
    }
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      if (color[index[u]] == color[index[v]]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool naive_partition(const IntMultiset& s) {
  require(s.elements.size() <= 20, "naive partition limited to 20 elements");
  const std::size_t k = s.elements.size();
  BigInt total = 0;
  for (const auto& v : s.elements) total += v;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    BigInt side = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((m >> i) & 1) side += s.elements[i];
    }
    if (2 * side == total) return true;
  }
  return false;
}

}  // namespace bsmwb::splithide
