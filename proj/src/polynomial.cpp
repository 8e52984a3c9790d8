// Copyright 2026 The mvq Authors.
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

#include "mvq/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace mvq {

EdgePolynomial EdgePolynomial::constant(int nvars, const Rational& c) {
  EdgePolynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

EdgePolynomial EdgePolynomial::monomial(const Exponents& m, const Rational& c) {
  EdgePolynomial p(static_cast<int>(m.size()));
  p.add_term(m, c);
  return p;
}

void EdgePolynomial::add_term(const Exponents& m, const Rational& c) {
  if (static_cast<int>(m.size()) != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational EdgePolynomial::coefficient(const Exponents& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

EdgePolynomial& EdgePolynomial::operator+=(const EdgePolynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

EdgePolynomial& EdgePolynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

EdgePolynomial EdgePolynomial::operator*(const EdgePolynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  EdgePolynomial out(nvars_);
  Exponents m(nvars_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) m[i] = a[i] + b[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

EdgePolynomial EdgePolynomial::substitute(const std::vector<int>& target,
                                          int nvars) const {
  if (static_cast<int>(target.size()) != nvars_)
    throw std::invalid_argument("substitution length mismatch");
  EdgePolynomial out(nvars);
  Exponents m(nvars);
  for (const auto& [a, c] : terms_) {
    std::fill(m.begin(), m.end(), 0);
    bool vanishes = false;
    for (int i = 0; i < nvars_; ++i) {
      if (a[i] == 0) continue;
      if (target[i] < 0) {
        vanishes = true;
        break;
      }
      m[target[i]] += a[i];
    }
    if (!vanishes) out.add_term(m, c);
  }
  return out;
}

int EdgePolynomial::homogeneous_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    int d = std::accumulate(m.begin(), m.end(), 0);
    if (deg >= 0 && d != deg) return -1;
    deg = d;
  }
  return deg;
}

bool EdgePolynomial::all_exponents_odd() const {
  for (const auto& [m, c] : terms_)
    for (int e : m)
      if (e % 2 == 0) return false;
  return true;
}

bool EdgePolynomial::all_exponents_even() const {
  for (const auto& [m, c] : terms_)
    for (int e : m)
      if (e % 2 != 0) return false;
  return true;
}

std::string EdgePolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += mvq::to_string(c);
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      out += "*" + var + std::to_string(i + 1);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

}  // namespace mvq
