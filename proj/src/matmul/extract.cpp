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

#include "bsmwb/core/error.hpp"
#include "bsmwb/core/protocol_io.hpp"
#include "bsmwb/matmul/matmul.hpp"

namespace bsmwb::matmul {

namespace {

using Bilinear = std::map<std::pair<std::string, std::string>, Rational>;

template <class K>
void add_scaled(std::map<K, Rational>& into, const std::map<K, Rational>& from, const Rational& s) {
  if (s == 0) return;
  for (const auto& [k, q] : from) {
    auto& slot = into[k];
    slot += q * s;
    if (slot == 0) into.erase(k);
  }
}

Bilinear outer(const LinearForm& x, const LinearForm& y, const Rational& s) {
  Bilinear out;
  for (const auto& [xv, xq] : x) {
    for (const auto& [yv, yq] : y) {
      const Rational v = xq * yq * s;
      if (v != 0) out[{xv, yv}] += v;
    }
  }
  return out;
}

}  // namespace

LowDegreeParts truncate_low_degree(const RationalPoly& p) {
  LowDegreeParts l;
  for (const auto& [m, q] : p.terms()) {
    if (m.empty()) {
      l.c = q;
    } else if (m.size() == 1 && is_x_variable(m[0])) {
      l.a[m[0]] = q;
    } else if (m.size() == 1 && is_y_variable(m[0])) {
      l.b[m[0]] = q;
    } else if (m.size() == 2 && is_x_variable(m[0]) && is_y_variable(m[1])) {
      l.ab[{m[0], m[1]}] = q;
    }
  }
  return l;
}

// Per wire: c, a, b, and ab held as a combination of rank-one candidate
// terms so the decomposition falls out with its output weights.
Extraction extract_low_degree(const ArithCircuit& circuit) {
  struct State {
    Rational c = 0;
    LinearForm a, b;
    std::map<std::uint32_t, Rational> ab;  // candidate term -> coefficient
  };
  std::vector<std::pair<LinearForm, LinearForm>> candidates;
  std::vector<State> st(circuit.gates().size());
  for (std::size_t i = 0; i < circuit.gates().size(); ++i) {
    const auto& g = circuit.gates()[i];
    State& s = st[i];
    switch (g.op) {
      case ArithOp::kAlice:
      case ArithOp::kBob: {
        const auto low = truncate_low_degree(g.binding);
        s.c = low.c;
        s.a = low.a;
        s.b = low.b;
        break;
      }
      case ArithOp::kConst:
        s.c = g.value;
        break;
      case ArithOp::kAdd:
        for (auto in : g.inputs) {
          s.c += st[in].c;
          add_scaled(s.a, st[in].a, 1);
          add_scaled(s.b, st[in].b, 1);
          add_scaled(s.ab, st[in].ab, 1);
        }
        break;
      case ArithOp::kScale: {
        const State& p = st[g.inputs[0]];
        s.c = p.c * g.value;
        add_scaled(s.a, p.a, g.value);
        add_scaled(s.b, p.b, g.value);
        add_scaled(s.ab, p.ab, g.value);
        break;
      }
      case ArithOp::kMul: {
        const State& p = st[g.inputs[0]];
        const State& q = st[g.inputs[1]];
        s.c = p.c * q.c;
        add_scaled(s.a, q.a, p.c);
        add_scaled(s.a, p.a, q.c);
        add_scaled(s.b, q.b, p.c);
        add_scaled(s.b, p.b, q.c);
        add_scaled(s.ab, q.ab, p.c);
        add_scaled(s.ab, p.ab, q.c);
        const auto t = static_cast<std::uint32_t>(candidates.size());
        candidates.emplace_back(p.a, q.b);
        candidates.emplace_back(q.a, p.b);
        s.ab[t] += 1;
        s.ab[t + 1] += 1;
        break;
      }
    }
  }

  Extraction out;
  out.multiplication_count = circuit.multiplication_count();
  std::vector<std::map<std::string, Rational>> weights(candidates.size());
  for (const auto& [name, w] : circuit.outputs()) {
    const State& s = st[w];
    LowDegreeParts l;
    l.c = s.c;
    l.a = s.a;
    l.b = s.b;
    for (const auto& [t, coeff] : s.ab) {
      add_scaled(l.ab, outer(candidates[t].first, candidates[t].second, 1), coeff);
      if (coeff != 0) weights[t][name] += coeff;
    }
    out.output_names.push_back(name);
    out.parts.push_back(std::move(l));
  }
  for (std::size_t t = 0; t < candidates.size(); ++t) {
    std::erase_if(weights[t], [](const auto& kv) { return kv.second == 0; });
    if (candidates[t].first.empty() || candidates[t].second.empty() || weights[t].empty()) continue;
    out.decomposition.terms.push_back({candidates[t].first, candidates[t].second, weights[t]});
  }
  return out;
}

std::map<std::string, Bilinear> TensorDecomposition::expand() const {
  std::map<std::string, Bilinear> out;
  for (const auto& t : terms) {
    for (const auto& [name, w] : t.weights) add_scaled(out[name], outer(t.x, t.y, 1), w);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
  return out;
}

std::string TensorDecomposition::to_json() const {
  using core::Json;
  auto form = [](const std::map<std::string, Rational>& f) {
    Json j = Json::object();
    for (const auto& [k, q] : f) j[k] = rational_to_string(q);
    return j;
  };
  Json arr = Json::array();
  for (const auto& t : terms) arr.push_back(Json{{"x", form(t.x)}, {"y", form(t.y)}, {"z", form(t.weights)}});
  return core::dump_canonical(Json{{"format", "bsmwb-decomposition"}, {"version", 1}, {"terms", arr}});
}

TensorDecomposition TensorDecomposition::from_json(const std::string& text) {
  const auto j = core::parse_document(text, "decomposition");
  auto bad = [](const std::string& why) { fail(ErrorKind::kParse, "decomposition: " + why); };
  if (!j.is_object() || j.value("format", "") != "bsmwb-decomposition") bad("wrong format tag");
  if (j.value("version", 0) != 1) bad("unsupported version");
  if (!j.contains("terms") || !j["terms"].is_array()) bad("missing term list");
  auto form = [&](const core::Json& f, bool (*side)(const std::string&)) {
    std::map<std::string, Rational> out;
    if (!f.is_object()) bad("term field is not an object");
    for (const auto& [k, v] : f.items()) {
      if (side && !side(k)) bad("variable '" + k + "' on the wrong side");
      if (!v.is_string()) bad("coefficients must be strings");
      try {
        out[k] = parse_rational(v.get<std::string>());
      } catch (const Error& e) {
        bad(e.what());
      }
    }
    return out;
  };
  TensorDecomposition d;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("x") || !t.contains("y") || !t.contains("z")) {
      bad("term needs x, y and z");
    }
    d.terms.push_back({form(t["x"], is_x_variable), form(t["y"], is_y_variable),
                       form(t["z"], nullptr)});
  }
  return d;
}

std::string entry_name(char matrix, int i, int j) {
  require(i >= 1 && i <= 9 && j >= 1 && j <= 9, "matrix entry index out of range");
  return std::string(1, matrix) + std::to_string(i) + std::to_string(j);
}

TensorDecomposition canonical_decomposition(int n) {
  TensorDecomposition d;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        d.terms.push_back({{{entry_name('X', i, j), 1}},
                           {{entry_name('Y', j, k), 1}},
                           {{entry_name('Z', i, k), 1}}});
      }
    }
  }
  return d;
}

DecompositionCheck verify_decomposition(const TensorDecomposition& d, int n, std::uint64_t seed,
                                        int spot_checks) {
  require(n >= 1 && n <= 9, "matrix size must lie in [1, 9]");
  std::map<std::string, Bilinear> target;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      for (int j = 1; j <= n; ++j) {
        target[entry_name('Z', i, k)][{entry_name('X', i, j), entry_name('Y', j, k)}] = 1;
      }
    }
  }
  DecompositionCheck check;
  check.coefficients_match = d.expand() == target;

  core::Rng rng(seed);
  auto draw = [&]() {
    const auto num = static_cast<long>(rng.uniform(19)) - 9;
    const auto den = static_cast<long>(rng.uniform(9)) + 1;
    return Rational(num, den);
  };
  auto eval = [](const LinearForm& f, const std::map<std::string, Rational>& point) {
    Rational v = 0;
    for (const auto& [k, q] : f) {
      auto it = point.find(k);
      v += it == point.end() ? Rational(0) : q * it->second;
    }
    return v;
  };
  check.spot_checks_pass = true;
  for (int s = 0; s < spot_checks && check.spot_checks_pass; ++s) {
    std::map<std::string, Rational> point;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        point[entry_name('X', i, j)] = draw();
        point[entry_name('Y', i, j)] = draw();
      }
    }
    std::map<std::string, Rational> got, want;
    for (const auto& t : d.terms) {
      const Rational v = eval(t.x, point) * eval(t.y, point);
      for (const auto& [name, w] : t.weights) got[name] += w * v;
    }
    for (int i = 1; i <= n; ++i) {
      for (int k = 1; k <= n; ++k) {
        Rational z = 0;
        for (int j = 1; j <= n; ++j) z += point[entry_name('X', i, j)] * point[entry_name('Y', j, k)];
        want[entry_name('Z', i, k)] = z;
      }
    }
    std::erase_if(got, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(want, [](const auto& kv) { return kv.second == 0; });
    if (got != want) check.spot_checks_pass = false;
  }
  return check;
}

}  // namespace bsmwb::matmul
