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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bsmwb::splithide {

using BigInt = boost::multiprecision::cpp_int;

// Literal +v / -v for variable v in [1, variable_count]; clauses are kept
// sorted by variable with duplicates removed.
using Clause = std::vector<int>;

class Cnf {
 public:
  Cnf() = default;
  Cnf(int variable_count, std::vector<Clause> clauses);

  int variable_count() const { return n_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t max_width() const;

  void add_clause(Clause c);
  // Clauses of both formulas over max(variable_count) variables.
  static Cnf conjoin(const Cnf& a, const Cnf& b);

  bool satisfied_by(const std::vector<std::uint8_t>& assignment) const;  // 1-based

  bool operator==(const Cnf&) const = default;

 private:
  int n_ = 0;
  std::vector<Clause> clauses_;
};

Clause normalize_clause(Clause c, int variable_count);

std::string to_dimacs(const Cnf& f);
Cnf from_dimacs(const std::string& text);

class Graph {
 public:
  using Edge = std::pair<std::uint32_t, std::uint32_t>;  // first < second

  Graph() = default;
  Graph(std::set<std::uint32_t> vertices, std::set<Edge> edges);
  static Graph on_vertices(std::uint32_t n);  // labels 1..n, no edges

  const std::set<std::uint32_t>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }

  void add_vertex(std::uint32_t v) { vertices_.insert(v); }
  void add_edge(std::uint32_t u, std::uint32_t v);
  bool has_edge(std::uint32_t u, std::uint32_t v) const;

  static Graph merge(const Graph& a, const Graph& b);
  static Graph complete(std::uint32_t n);

  bool operator==(const Graph&) const = default;

 private:
  std::set<std::uint32_t> vertices_;
  std::set<Edge> edges_;
};

// "n m" header followed by m lines "u v"; vertices are 1..n. Graphs whose
// labels are not 1..n are written with the largest label as n.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

struct IntMultiset {
  std::vector<BigInt> elements;  // kept in insertion order

  bool operator==(const IntMultiset&) const = default;
};

std::string to_lines(const IntMultiset& s);
IntMultiset from_lines(const std::string& text);

}  // namespace bsmwb::splithide
