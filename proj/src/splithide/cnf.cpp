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

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "bsmwb/core/error.hpp"
#include "bsmwb/splithide/instances.hpp"

namespace bsmwb::splithide {

Clause normalize_clause(Clause c, int variable_count) {
  for (int lit : c) {
    require(lit != 0 && std::abs(lit) <= variable_count,
            "literal " + std::to_string(lit) + " outside variables 1.." +
                std::to_string(variable_count));
  }
  std::sort(c.begin(), c.end(), [](int a, int b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
  });
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (std::size_t i = 1; i < c.size(); ++i) {
    require(c[i] != -c[i - 1], "clause contains a literal and its negation");
  }
  return c;
}

Cnf::Cnf(int variable_count, std::vector<Clause> clauses) : n_(variable_count) {
  require(variable_count >= 0, "negative variable count");
  for (auto& c : clauses) add_clause(std::move(c));
}

void Cnf::add_clause(Clause c) { clauses_.push_back(normalize_clause(std::move(c), n_)); }

std::size_t Cnf::max_width() const {
  std::size_t w = 0;
  for (const auto& c : clauses_) w = std::max(w, c.size());
  return w;
}

Cnf Cnf::conjoin(const Cnf& a, const Cnf& b) {
  Cnf out(std::max(a.n_, b.n_), {});
  out.clauses_ = a.clauses_;
  out.clauses_.insert(out.clauses_.end(), b.clauses_.begin(), b.clauses_.end());
  return out;
}

bool Cnf::satisfied_by(const std::vector<std::uint8_t>& assignment) const {
  for (const auto& c : clauses_) {
    bool sat = false;
    for (int lit : c) {
      bool v = assignment[static_cast<std::size_t>(std::abs(lit))] != 0;
      if ((lit > 0) == v) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::string to_dimacs(const Cnf& f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count() << ' ' << f.clauses().size() << '\n';
  for (const auto& c : f.clauses()) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

Cnf from_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int vars = -1;
  long declared = -1;
  Cnf f;
  Clause current;
  auto parse_fail = [&](const std::string& why, std::size_t col) {
    fail(ErrorKind::kParse,
         "line " + std::to_string(line_no) + ":" + std::to_string(col) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == '%') continue;
    if (line[first] == 'p') {
      std::istringstream hs(line.substr(first));
      std::string p, kind;
      if (vars >= 0 || !(hs >> p >> kind >> vars >> declared) || kind != "cnf" || vars < 0 ||
          declared < 0) {
        parse_fail("bad problem line", first + 1);
      }
      f = Cnf(vars, {});
      continue;
    }
    if (vars < 0) parse_fail("clause before 'p cnf' header", first + 1);
    std::size_t pos = first;
    while (pos < line.size()) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string::npos) break;
      std::size_t end = line.find_first_of(" \t\r", pos);
      std::string tok = line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      char* stop = nullptr;
      long lit = std::strtol(tok.c_str(), &stop, 10);
      if (*stop != '\0' || tok.empty()) parse_fail("bad literal '" + tok + "'", pos + 1);
      if (lit == 0) {
        try {
          f.add_clause(current);
        } catch (const Error& e) {
          parse_fail(e.what(), pos + 1);
        }
        current.clear();
      } else {
        if (std::labs(lit) > vars) parse_fail("literal beyond declared variables", pos + 1);
        current.push_back(static_cast<int>(lit));
      }
      pos = end;
    }
  }
  if (vars < 0) fail(ErrorKind::kParse, "missing 'p cnf' header");
  if (!current.empty()) fail(ErrorKind::kParse, "last clause not terminated by 0");
  if (static_cast<long>(f.clauses().size()) != declared) {
    fail(ErrorKind::kParse, "header declares " + std::to_string(declared) + " clauses, found " +
                                std::to_string(f.clauses().size()));
  }
  return f;
}

}  // namespace bsmwb::splithide
