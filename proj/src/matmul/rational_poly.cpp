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
#include <cctype>

#include "bsmwb/core/error.hpp"
#include "bsmwb/matmul/matmul.hpp"

namespace bsmwb::matmul {

using boost::multiprecision::cpp_int;

Rational parse_rational(const std::string& text) {
  auto integer = [&](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) fail(ErrorKind::kRejected, "not a rational number: '" + text + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
        fail(ErrorKind::kRejected, "not a rational number: '" + text + "'");
      }
    }
    return cpp_int(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(integer(text, true));
  const cpp_int num = integer(text.substr(0, slash), true);
  const cpp_int den = integer(text.substr(slash + 1), false);
  if (den == 0) fail(ErrorKind::kRejected, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
  const cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

bool is_x_variable(const std::string& name) { return !name.empty() && name[0] == 'X'; }
bool is_y_variable(const std::string& name) { return !name.empty() && name[0] == 'Y'; }

RationalPoly RationalPoly::constant(const Rational& q) {
  RationalPoly p;
  p.add_term({}, q);
  return p;
}

RationalPoly RationalPoly::variable(const std::string& name) {
  RationalPoly p;
  p.add_term({name}, 1);
  return p;
}

void RationalPoly::add_term(Monomial m, const Rational& coeff) {
  if (coeff == 0) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.emplace(std::move(m), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  RationalPoly r = *this;
  for (const auto& [m, q] : o.terms_) r.add_term(m, q);
  return r;
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  RationalPoly r;
  for (const auto& [m1, q1] : terms_) {
    for (const auto& [m2, q2] : o.terms_) {
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      r.add_term(std::move(m), q1 * q2);
    }
  }
  return r;
}

RationalPoly RationalPoly::scaled(const Rational& q) const {
  RationalPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * q);
  return r;
}

RationalPoly RationalPoly::graded_part(int dx, int dy) const {
  RationalPoly r;
  for (const auto& [m, q] : terms_) {
    const auto nx = std::count_if(m.begin(), m.end(), is_x_variable);
    const auto ny = std::count_if(m.begin(), m.end(), is_y_variable);
    if (nx == dx && ny == dy && nx + ny == static_cast<long>(m.size())) r.add_term(m, q);
  }
  return r;
}

Rational RationalPoly::evaluate(const std::map<std::string, Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, q] : terms_) {
    Rational v = q;
    for (const auto& name : m) {
      auto it = point.find(name);
      require(it != point.end(), "no value for variable " + name);
      v *= it->second;
    }
    total += v;
  }
  return total;
}

std::string RationalPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, q] : terms_) {
    Rational mag = q < 0 ? Rational(-q) : q;
    if (out.empty()) {
      if (q < 0) out += "-";
    } else {
      out += q < 0 ? " - " : " + ";
    }
    std::string body;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!body.empty()) body += "*";
      body += m[i];
      if (j - i > 1) body += "^" + std::to_string(j - i);
      i = j;
    }
    if (body.empty()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += body;
    } else {
      out += rational_to_string(mag) + "*" + body;
    }
  }
  return out;
}

// term := factor ('*' factor)*, factor := rational | NAME ['^' k]
RationalPoly RationalPoly::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) fail(ErrorKind::kParse, "empty polynomial");
  RationalPoly out;
  std::size_t pos = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::kParse, "polynomial '" + text + "' at offset " + std::to_string(pos) + ": " + why);
  };
  bool first = true;
  while (pos < s.size()) {
    bool negate = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negate = s[pos] == '-';
      ++pos;
    } else if (!first) {
      bad("expected '+' or '-'");
    }
    first = false;
    Rational coeff = negate ? -1 : 1;
    Monomial m;
    while (true) {
      if (pos >= s.size()) bad("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::size_t end = pos;
        while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/')) ++end;
        try {
          coeff *= parse_rational(s.substr(pos, end - pos));
        } catch (const Error&) {
          bad("bad rational coefficient");
        }
        pos = end;
      } else if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
        std::size_t end = pos;
        while (end < s.size() && std::isalnum(static_cast<unsigned char>(s[end]))) ++end;
        const std::string name = s.substr(pos, end - pos);
        pos = end;
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          std::size_t e = pos;
          while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
          if (e == pos || e - pos > 2) bad("bad exponent");
          power = std::stoi(s.substr(pos, e - pos));
          pos = e;
        }
        for (int k = 0; k < power; ++k) m.push_back(name);
      } else {
        bad(std::string("unexpected character '") + s[pos] + "'");
      }
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    out.add_term(std::move(m), coeff);
  }
  return out;
}

}  // namespace bsmwb::matmul
