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

#ifndef MVQ_POLYNOMIAL_HPP_
#define MVQ_POLYNOMIAL_HPP_

#include <map>
#include <string>
#include <vector>

#include "mvq/exact.hpp"

namespace mvq {

using Exponents = std::vector<int>;

// Sparse polynomial with rational coefficients in a fixed number of
// variables b_1..b_k.
class EdgePolynomial {
 public:
  EdgePolynomial() = default;
  explicit EdgePolynomial(int nvars) : nvars_(nvars) {}
  static EdgePolynomial constant(int nvars, const Rational& c);
  static EdgePolynomial monomial(const Exponents& m, const Rational& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const Exponents& m, const Rational& c);
  Rational coefficient(const Exponents& m) const;

  EdgePolynomial& operator+=(const EdgePolynomial& o);
  EdgePolynomial& operator*=(const Rational& c);
  EdgePolynomial operator*(const EdgePolynomial& o) const;

  // Rewrites a polynomial in variables x_1..x_n into one in `nvars`
  // variables: x_i becomes b_{target[i]}, or 0 when target[i] < 0.
  // Repeated targets multiply (a loop feeds the same b twice).
  EdgePolynomial substitute(const std::vector<int>& target, int nvars) const;

  // Total degree if homogeneous, -1 otherwise (or zero polynomial).
  int homogeneous_degree() const;
  bool all_exponents_odd() const;
  bool all_exponents_even() const;

  std::string to_string(const std::string& var = "b") const;

  friend bool operator==(const EdgePolynomial& a, const EdgePolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

}  // namespace mvq

#endif  // MVQ_POLYNOMIAL_HPP_
