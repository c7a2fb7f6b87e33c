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
#include "bsmwb/splithide/instances.hpp"

namespace bsmwb::splithide {

Graph::Graph(std::set<std::uint32_t> vertices, std::set<Edge> edges)
    : vertices_(std::move(vertices)) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::on_vertices(std::uint32_t n) {
  Graph g;
  for (std::uint32_t v = 1; v <= n; ++v) g.vertices_.insert(v);
  return g;
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
  require(u != v, "self-loop at vertex " + std::to_string(u));
  require(vertices_.count(u) && vertices_.count(v), "edge endpoint is not a vertex");
  edges_.insert({std::min(u, v), std::max(u, v)});
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
  return edges_.count({std::min(u, v), std::max(u, v)}) != 0;
}

Graph Graph::merge(const Graph& a, const Graph& b) {
  Graph g = a;
  g.vertices_.insert(b.vertices_.begin(), b.vertices_.end());
  g.edges_.insert(b.edges_.begin(), b.edges_.end());
  return g;
}

Graph Graph::complete(std::uint32_t n) {
  Graph g = on_vertices(n);
  for (std::uint32_t u = 1; u <= n; ++u) {
    for (std::uint32_t v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  std::uint32_t n = g.vertices().empty() ? 0 : *g.vertices().rbegin();
  out << n << ' ' << g.edges().size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  long n = -1, m = -1;
  Graph g;
  long seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long a, b;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra)) {
      fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ":" +
                                  std::to_string(first + 1) + ": expected two integers");
    }
    if (n < 0) {
      if (a < 0 || b < 0) fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": bad header");
      n = a;
      m = b;
      g = Graph::on_vertices(static_cast<std::uint32_t>(n));
      continue;
    }
    if (a < 1 || b < 1 || a > n || b > n) {
      fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": vertex outside 1.." +
                                  std::to_string(n));
    }
    try {
      g.add_edge(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    } catch (const Error& e) {
      fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + e.what());
    }
    ++seen;
  }
  if (n < 0) fail(ErrorKind::kParse, "missing 'n m' header");
  if (seen != m) {
    fail(ErrorKind::kParse, "header declares " + std::to_string(m) + " edges, found " +
                                std::to_string(seen));
  }
  return g;
}

}  // namespace bsmwb::splithide
