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

#include "bsmwb/core/verify.hpp"

#include <algorithm>
#include <sstream>

#include "bsmwb/core/error.hpp"
#include "bsmwb/core/parallel.hpp"

namespace bsmwb::core {

namespace {

using Mismatches = std::vector<Mismatch>;

// Circuit Carols are evaluated on 64 values of x at once.
Mismatches verify_sliced(const BsmProtocol& p, const BooleanCircuit& circuit,
                         const TruthTable& target, std::uint64_t y_begin, std::uint64_t y_end) {
  const int n = p.input_arity();
  const std::uint64_t count = p.input_count();
  const std::uint32_t ao = p.carol().alice_offset();
  const std::uint32_t bo = p.carol().bob_offset();
  const std::uint32_t la = p.alice_length() - ao;
  const std::uint32_t lb = p.bob_length() - bo;
  Mismatches out;
  std::vector<std::uint64_t> aw(la), bw(lb);
  for (std::uint64_t x0 = 0; x0 < count; x0 += 64) {
    const std::uint64_t lanes = std::min<std::uint64_t>(64, count - x0);
    const std::uint64_t lane_mask = lanes == 64 ? ~0ULL : (1ULL << lanes) - 1;
    std::fill(aw.begin(), aw.end(), 0);
    for (std::uint64_t t = 0; t < lanes; ++t) {
      auto msg = p.alice(x0 + t);
      for (std::uint32_t i = 0; i < la; ++i) aw[i] |= std::uint64_t{msg[ao + i]} << t;
    }
    for (std::uint64_t y = y_begin; y < y_end; ++y) {
      auto msg = p.bob(y);
      for (std::uint32_t i = 0; i < lb; ++i) bw[i] = msg[bo + i] ? ~0ULL : 0;
      std::uint64_t produced = circuit.evaluate_sliced(aw, bw) & lane_mask;
      std::uint64_t expected = 0;
      const std::uint64_t base = x0 | (y << n);
      for (std::uint64_t t = 0; t < lanes; ++t) expected |= std::uint64_t{target[base + t]} << t;
      std::uint64_t diff = produced ^ expected;
      while (diff) {
        int t = __builtin_ctzll(diff);
        diff &= diff - 1;
        bool e = (expected >> t) & 1;
        out.push_back({x0 + t, y, e, !e});
      }
    }
  }
  return out;
}

Mismatches verify_plain(const BsmProtocol& p, const TruthTable& target, std::uint64_t y_begin,
                        std::uint64_t y_end) {
  Mismatches out;
  for (std::uint64_t y = y_begin; y < y_end; ++y) {
    for (std::uint64_t x = 0; x < p.input_count(); ++x) {
      bool e = target.at(x, y);
      bool got = p.run(x, y);
      if (e != got) out.push_back({x, y, e, got});
    }
  }
  return out;
}

}  // namespace

VerificationReport verify_exhaustive(const BsmProtocol& protocol, const TruthTable& target,
                                     const VerifyOptions& options) {
  require(target.arity() == 2 * protocol.input_arity(),
          "target arity " + std::to_string(target.arity()) + " is not twice the input arity " +
              std::to_string(protocol.input_arity()));
  options.limits.check(target.arity(), "exhaustive verification");
  protocol.check_well_formed();

  const auto* circuit = std::get_if<BooleanCircuit>(&protocol.carol().payload());
  auto chunks = parallel_chunks<Mismatches>(
      protocol.input_count(), options.jobs, [&](std::uint64_t b, std::uint64_t e) {
        return circuit ? verify_sliced(protocol, *circuit, target, b, e)
                       : verify_plain(protocol, target, b, e);
      });

  VerificationReport report;
  report.pairs_checked = protocol.input_count() * protocol.input_count();
  report.audited = protocol.carol().audited();
  for (auto& c : chunks) {
    report.mismatches.insert(report.mismatches.end(), c.begin(), c.end());
  }
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const Mismatch& a, const Mismatch& b) {
              return a.y != b.y ? a.y < b.y : a.x < b.x;
            });
  return report;
}

Measurement measure(const BsmProtocol& protocol) {
  const CarolCost& declared = protocol.carol().declared_cost();
  const CarolCost actual = protocol.carol().recompute_cost();
  auto field = [](std::optional<std::uint64_t> v) {
    return v ? std::to_string(*v) : std::string("none");
  };
  if (actual.gate_count != declared.gate_count) {
    fail(ErrorKind::kIntegrity, "declared gate count " + std::to_string(declared.gate_count) +
                                    " but payload has " + std::to_string(actual.gate_count));
  }
  if (actual.degree != declared.degree) {
    fail(ErrorKind::kIntegrity,
         "declared degree " + field(declared.degree) + " but payload has " + field(actual.degree));
  }
  if (actual.depth != declared.depth) {
    fail(ErrorKind::kIntegrity,
         "declared depth " + field(declared.depth) + " but payload has " + field(actual.depth));
  }
  return {actual, protocol.alice_length(), protocol.bob_length(), protocol.carol().audited()};
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "x,y,expected,produced\n";
  for (const auto& m : report.mismatches) {
    out << m.x << ',' << m.y << ',' << int(m.expected) << ',' << int(m.produced) << '\n';
  }
  return out.str();
}

}  // namespace bsmwb::core
