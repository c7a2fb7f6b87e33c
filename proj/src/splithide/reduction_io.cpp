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
#include "bsmwb/splithide/reductions.hpp"

namespace bsmwb::splithide {

namespace {

template <class Part>
ReductionDocument document(ReductionId id, const ReductionOutput<Part>& out,
                           std::string (*render)(const Part&)) {
  return {id, out.seed, out.fingerprint, render(out.alice_part), render(out.bob_part)};
}

void check_part(ReductionId id, const std::string& text) {
  switch (id) {
    case ReductionId::kSat:
      from_dimacs(text);
      break;
    case ReductionId::k3Col:
      from_edge_list(text);
      break;
    case ReductionId::kPartition:
      from_lines(text);
      break;
  }
}

}  // namespace

ReductionDocument make_document(ReductionId id, const ReductionOutput<Cnf>& out) {
  return document(id, out, to_dimacs);
}

ReductionDocument make_document(ReductionId id, const ReductionOutput<Graph>& out) {
  return document(id, out, to_edge_list);
}

ReductionDocument make_document(ReductionId id, const ReductionOutput<IntMultiset>& out) {
  return document(id, out, to_lines);
}

std::string ReductionDocument::to_text() const {
  std::ostringstream os;
  os << "reduction " << reduction_name(id) << "\nseed " << seed << "\nfingerprint";
  for (auto f : fingerprint) os << ' ' << f;
  os << "\n[alice]\n" << alice_text << "[bob]\n" << bob_text;
  return os.str();
}

ReductionDocument ReductionDocument::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  ReductionDocument d;
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + why);
  };
  auto header = [&](const std::string& key) {
    if (!std::getline(is, line)) bad("missing '" + key + "' line");
    ++line_no;
    if (line.rfind(key, 0) != 0) bad("expected '" + key + "'");
    return line.substr(key.size());
  };
  {
    std::istringstream ls(header("reduction"));
    std::string name;
    if (!(ls >> name)) bad("missing reduction name");
    try {
      d.id = reduction_from_name(name);
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  {
    std::istringstream ls(header("seed"));
    if (!(ls >> d.seed)) bad("seed must be an unsigned integer");
  }
  {
    std::istringstream ls(header("fingerprint"));
    std::uint64_t v;
    while (ls >> v) d.fingerprint.push_back(v);
    if (!ls.eof()) bad("fingerprint must list unsigned integers");
  }
  if (!std::getline(is, line) || line != "[alice]") {
    ++line_no;
    bad("expected '[alice]'");
  }
  ++line_no;
  std::string* section = &d.alice_text;
  bool saw_bob = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (line == "[bob]" && !saw_bob) {
      section = &d.bob_text;
      saw_bob = true;
      continue;
    }
    *section += line + '\n';
  }
  if (!saw_bob) bad("missing '[bob]' section");
  check_part(d.id, d.alice_text);
  check_part(d.id, d.bob_text);
  return d;
}

}  // namespace bsmwb::splithide
