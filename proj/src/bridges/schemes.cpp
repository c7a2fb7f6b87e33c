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
#include <bit>

#include "bsmwb/bridges/bridges.hpp"
#include "bsmwb/core/error.hpp"
#include "bsmwb/core/parallel.hpp"

namespace bsmwb::bridges {

namespace {

void append_bits(std::vector<std::uint8_t>& out, std::uint64_t v, int bits) {
  for (int i = 0; i < bits; ++i) out.push_back((v >> i) & 1);
}

// Exact query histograms per input, compared against input 0 and against
// the uniform distribution over `space` values.
struct Marginals {
  bool fixed = true;
  bool uniform = true;
};

Marginals marginals(const std::vector<std::uint64_t>& queries, std::uint64_t inputs,
                    std::uint64_t per_input, std::uint64_t space) {
  Marginals m;
  std::vector<std::uint64_t> first(space, 0), counts(space);
  for (std::uint64_t x = 0; x < inputs; ++x) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint64_t r = 0; r < per_input; ++r) ++counts[queries[x * per_input + r]];
    if (x == 0) {
      first = counts;
      m.uniform = per_input % space == 0 &&
                  std::all_of(counts.begin(), counts.end(),
                              [&](std::uint64_t c) { return c == per_input / space; });
    } else if (counts != first) {
      m.fixed = false;
    }
  }
  if (!m.fixed) m.uniform = false;
  return m;
}

}  // namespace

std::vector<std::uint8_t> IhScheme::message_a(std::uint64_t q) const {
  std::vector<std::uint8_t> out;
  append_bits(out, q, query_bits_a);
  out.insert(out.end(), oracle_a.begin() + q * answer_length_a,
             oracle_a.begin() + (q + 1) * answer_length_a);
  return out;
}

std::vector<std::uint8_t> IhScheme::message_b(std::uint64_t q) const {
  std::vector<std::uint8_t> out;
  append_bits(out, q, query_bits_b);
  out.insert(out.end(), oracle_b.begin() + q * answer_length_b,
             oracle_b.begin() + (q + 1) * answer_length_b);
  return out;
}

bool IhScheme::run(std::uint64_t x, std::uint64_t r) const {
  const std::uint64_t k = x * randomness_count + r;
  return combine.evaluate(message_a(query_a[k]), message_b(query_b[k]), modulus);
}

void IhScheme::check_shape() const {
  auto bad = [](const std::string& what) { fail(ErrorKind::kMalformed, what); };
  if (n < 0 || n > 20 || query_bits_a < 0 || query_bits_a > 24 || query_bits_b < 0 ||
      query_bits_b > 24 || randomness_count == 0) {
    bad("scheme dimensions out of range");
  }
  const std::uint64_t pairs = (std::uint64_t{1} << n) * randomness_count;
  if (query_a.size() != pairs || query_b.size() != pairs) bad("query tables have the wrong size");
  for (auto q : query_a) {
    if (q >> query_bits_a) bad("query A outside its query space");
  }
  for (auto q : query_b) {
    if (q >> query_bits_b) bad("query B outside its query space");
  }
  if (oracle_a.size() != (std::uint64_t{1} << query_bits_a) * answer_length_a ||
      oracle_b.size() != (std::uint64_t{1} << query_bits_b) * answer_length_b) {
    bad("oracle tables have the wrong size");
  }
  for (auto s : oracle_a) {
    if (s >= modulus) bad("oracle A answer outside the alphabet");
  }
  for (auto s : oracle_b) {
    if (s >= modulus) bad("oracle B answer outside the alphabet");
  }
  if (target.arity() != n) bad("target arity differs from the scheme arity");
}

IhAudit audit_ih(const IhScheme& scheme, int jobs) {
  scheme.check_shape();
  const std::uint64_t inputs = std::uint64_t{1} << scheme.n;
  const std::uint64_t pairs = inputs * scheme.randomness_count;
  require(pairs <= (std::uint64_t{1} << 26), "scheme too large to enumerate");
  IhAudit audit;
  audit.pairs_checked = pairs;
  auto chunks = core::parallel_chunks<std::vector<InputRandomness>>(
      inputs, jobs, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<InputRandomness> wrong;
        for (std::uint64_t x = begin; x < end; ++x) {
          for (std::uint64_t r = 0; r < scheme.randomness_count; ++r) {
            if (scheme.run(x, r) != scheme.target[x]) wrong.push_back({x, r});
          }
        }
        return wrong;
      });
  for (auto& c : chunks) audit.wrong.insert(audit.wrong.end(), c.begin(), c.end());
  const auto ma = marginals(scheme.query_a, inputs, scheme.randomness_count,
                            std::uint64_t{1} << scheme.query_bits_a);
  const auto mb = marginals(scheme.query_b, inputs, scheme.randomness_count,
                            std::uint64_t{1} << scheme.query_bits_b);
  audit.marginal_a_fixed = ma.fixed;
  audit.marginal_b_fixed = mb.fixed;
  audit.uniform_a = ma.uniform;
  audit.uniform_b = mb.uniform;
  return audit;
}

// -- Smooth codes --------------------------------------------------------------

int SmoothCode::query_bits() const {
  int b = 0;
  while ((std::uint64_t{1} << b) < length) ++b;
  return b;
}

namespace {

std::vector<std::uint8_t> code_message(const SmoothCode& code,
                                       const std::vector<std::uint8_t>& word, std::uint64_t j) {
  std::vector<std::uint8_t> out;
  append_bits(out, j, code.query_bits());
  out.insert(out.end(), word.begin() + j * code.symbol_length,
             word.begin() + (j + 1) * code.symbol_length);
  return out;
}

}  // namespace

SmoothAudit audit_smooth_code(const SmoothCode& code) {
  require(code.message_bits >= 0 && code.message_bits <= 16, "message length out of range");
  require(code.length >= 1 && code.length <= (std::uint64_t{1} << 20), "code length out of range");
  SmoothAudit audit;
  const std::uint64_t messages = std::uint64_t{1} << code.message_bits;
  for (std::uint64_t m = 0; m < messages; ++m) {
    const auto word = code.encode(m);
    require(word.size() == code.length * code.symbol_length, "encoder output has the wrong length");
    for (int i = 0; i < code.message_bits; ++i) {
      for (std::uint64_t r = 0; r < code.randomness_count; ++r) {
        const auto [j1, j2] = code.queries(i, r);
        require(j1 < code.length && j2 < code.length, "decoder query out of range");
        const bool got = code.decode.evaluate(code_message(code, word, j1),
                                              code_message(code, word, j2), 2);
        ++audit.decodings_checked;
        if (got != (((m >> i) & 1) != 0)) ++audit.decoding_errors;
      }
    }
  }
  // Each query on its own must be uniform over [N] for every index.
  for (int i = 0; i < code.message_bits && audit.smooth; ++i) {
    std::vector<std::uint64_t> c1(code.length, 0), c2(code.length, 0);
    for (std::uint64_t r = 0; r < code.randomness_count; ++r) {
      const auto [j1, j2] = code.queries(i, r);
      ++c1[j1];
      ++c2[j2];
    }
    if (code.randomness_count % code.length != 0) audit.smooth = false;
    const std::uint64_t want = code.randomness_count / code.length;
    for (std::uint64_t j = 0; j < code.length; ++j) {
      if (c1[j] != want || c2[j] != want) audit.smooth = false;
    }
  }
  return audit;
}

namespace {

// XOR of the two answer symbols, which sit after `query_bits` query bits.
CarolEvaluator xor_answers(int query_bits) {
  core::BooleanCircuit c;
  c.set_output(c.add_xor({c.alice(0), c.bob(0)}));
  return CarolEvaluator::circuit(std::move(c))
      .with_offsets(static_cast<std::uint32_t>(query_bits), static_cast<std::uint32_t>(query_bits));
}

SmoothCode hadamard_like(int n, std::string name, bool biased) {
  require(n >= 1 && n <= 16, "Hadamard code supports 1 <= n <= 16");
  SmoothCode code;
  code.name = std::move(name);
  code.message_bits = n;
  code.length = std::uint64_t{1} << n;
  code.symbol_length = 1;
  code.encode = [n](std::uint64_t m) {
    std::vector<std::uint8_t> w(std::uint64_t{1} << n);
    for (std::uint64_t j = 0; j < w.size(); ++j) w[j] = std::popcount(m & j) & 1;
    return w;
  };
  const std::uint64_t len = code.length;
  code.randomness_count = biased ? 2 * len : len;
  code.queries = [len](int i, std::uint64_t r) {
    const std::uint64_t j = r < len ? r : 0;
    return std::pair{j, j ^ (std::uint64_t{1} << i)};
  };
  code.decode = xor_answers(n);
  return code;
}

}  // namespace

SmoothCode hadamard_code(int n) { return hadamard_like(n, "hadamard", false); }

SmoothCode biased_hadamard_code(int n) { return hadamard_like(n, "biased-hadamard", true); }

SmoothCode repetition_code() {
  SmoothCode code;
  code.name = "repetition";
  code.message_bits = 1;
  code.length = 2;
  code.symbol_length = 1;
  code.encode = [](std::uint64_t m) { return std::vector<std::uint8_t>{std::uint8_t(m & 1), std::uint8_t(m & 1)}; };
  code.randomness_count = 2;
  code.queries = [](int, std::uint64_t r) { return std::pair{r, 1 - r}; };
  core::BooleanCircuit c;
  c.set_output(c.alice(0));
  code.decode = CarolEvaluator::circuit(std::move(c)).with_offsets(1, 1);
  return code;
}

SmoothCode smooth_code_by_name(const std::string& name, int n) {
  if (name == "hadamard") return hadamard_code(n);
  if (name == "biased-hadamard") return biased_hadamard_code(n);
  if (name == "repetition") return repetition_code();
  fail(ErrorKind::kRejected, "unknown smooth code '" + name + "'");
}

// -- PIR ---------------------------------------------------------------------

std::vector<std::uint8_t> PirScheme::answer(std::uint64_t database, std::uint64_t q) const {
  const auto word = code.encode(database);
  return code_message(code, word, q);
}

bool PirScheme::run(std::uint64_t database, int index, std::uint64_t r) const {
  const auto word = code.encode(database);
  const std::uint64_t k = static_cast<std::uint64_t>(index) * code.randomness_count + r;
  return code.decode.evaluate(code_message(code, word, query_a[k]),
                              code_message(code, word, query_b[k]), 2);
}

PirAudit audit_pir(const PirScheme& pir) {
  PirAudit audit;
  const int d = pir.code.message_bits;
  const std::uint64_t r_count = pir.code.randomness_count;
  for (std::uint64_t db = 0; db < (std::uint64_t{1} << d); ++db) {
    const auto word = pir.code.encode(db);
    for (int i = 0; i < d; ++i) {
      for (std::uint64_t r = 0; r < r_count; ++r) {
        const std::uint64_t k = static_cast<std::uint64_t>(i) * r_count + r;
        const bool got = pir.code.decode.evaluate(code_message(pir.code, word, pir.query_a[k]),
                                                  code_message(pir.code, word, pir.query_b[k]), 2);
        ++audit.runs_checked;
        if (got != (((db >> i) & 1) != 0)) ++audit.errors;
      }
    }
  }
  const std::uint64_t space = std::uint64_t{1} << pir.code.query_bits();
  audit.index_hidden = marginals(pir.query_a, static_cast<std::uint64_t>(d), r_count, space).fixed &&
                       marginals(pir.query_b, static_cast<std::uint64_t>(d), r_count, space).fixed;
  return audit;
}

PirScheme smooth_ldc_to_pir(const SmoothCode& code) {
  const auto audit = audit_smooth_code(code);
  require(audit.decoding_errors == 0, "code does not decode correctly");
  require(audit.smooth, "decoder queries are not uniformly distributed");
  PirScheme pir{code, {}, {}};
  for (int i = 0; i < code.message_bits; ++i) {
    for (std::uint64_t r = 0; r < code.randomness_count; ++r) {
      const auto [j1, j2] = code.queries(i, r);
      pir.query_a.push_back(j1);
      pir.query_b.push_back(j2);
    }
  }
  return pir;
}

IhScheme pir_to_ih(const PirScheme& pir, const TruthTable& f) {
  const int k = f.arity();
  require(k <= 20 && (std::uint64_t{1} << k) <= pir.database_length(),
          "function has more inputs than the database has entries");
  std::uint64_t database = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (f[x]) database |= std::uint64_t{1} << x;
  }
  const auto& code = pir.code;
  IhScheme s;
  s.n = k;
  s.randomness_count = code.randomness_count;
  s.query_bits_a = s.query_bits_b = code.query_bits();
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    for (std::uint64_t r = 0; r < code.randomness_count; ++r) {
      s.query_a.push_back(pir.query_a[x * code.randomness_count + r]);
      s.query_b.push_back(pir.query_b[x * code.randomness_count + r]);
    }
  }
  s.answer_length_a = s.answer_length_b = code.symbol_length;
  const auto word = code.encode(database);
  const std::uint64_t space = std::uint64_t{1} << s.query_bits_a;
  std::vector<std::uint8_t> oracle(space * code.symbol_length, 0);
  std::copy(word.begin(), word.end(), oracle.begin());
  s.oracle_a = oracle;
  s.oracle_b = std::move(oracle);
  s.combine = code.decode;
  s.target = f;
  return s;
}

}  // namespace bsmwb::bridges
