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

std::string to_lines(const IntMultiset& s) {
  std::ostringstream out;
  for (const auto& v : s.elements) out << v << '\n';
  return out.str();
}

IntMultiset from_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  IntMultiset s;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(first, last - first + 1);
    for (std::size_t i = 0; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') {
        fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ":" +
                                    std::to_string(first + i + 1) +
                                    ": expected a non-negative decimal integer");
      }
    }
    s.elements.emplace_back(tok);
  }
  return s;
}

}  // namespace bsmwb::splithide
