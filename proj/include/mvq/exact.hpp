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

#ifndef MVQ_EXACT_HPP_
#define MVQ_EXACT_HPP_

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace mvq {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when a request is well formed but outside the range where a
// formula is known to hold (maps to CLI exit status 2).
class OutOfHypothesis : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Integer factorial(long n);
// n!! with (-1)!! = 1 and (0)!! = 1.
Integer double_factorial(long n);
// Zero outside 0 <= k <= n.
Integer binomial(long n, long k);

// B_n with B_1 = -1/2.
Rational bernoulli(int n);

Rational make_rational(const Integer& num, const Integer& den = 1);
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);
double to_double(const Rational& q);
// Power with integer exponent (negative allowed for nonzero base).
Rational rpow(const Rational& base, long e);

// coeff * pi^pi_power.
struct PiRational {
  Rational coeff{0};
  int pi_power = 0;

  PiRational() = default;
  PiRational(Rational c, int p);

  bool is_zero() const { return sgn(coeff) == 0; }
  double to_double() const;
  std::string to_string() const;

  PiRational& operator+=(const PiRational& o);
  PiRational& operator-=(const PiRational& o);
  PiRational& operator*=(const PiRational& o);
  PiRational& operator*=(const Rational& r);
};

PiRational operator+(PiRational a, const PiRational& b);
PiRational operator-(PiRational a, const PiRational& b);
PiRational operator*(PiRational a, const PiRational& b);
PiRational operator*(PiRational a, const Rational& r);
PiRational operator*(const Rational& r, PiRational a);
bool operator==(const PiRational& a, const PiRational& b);
inline bool operator!=(const PiRational& a, const PiRational& b) { return !(a == b); }

// Quotient of two single-power values; b must be nonzero. Result may carry
// a negative power, hence the separate type.
struct PiQuotient {
  Rational coeff{0};
  int pi_power = 0;  // any sign
  double to_double() const;
  std::string to_string() const;
};
PiQuotient divide(const PiRational& a, const PiRational& b);
bool operator==(const PiQuotient& a, const PiQuotient& b);

// Sum of mixed pi powers; zero coefficients are never stored.
struct PiPolynomial {
  std::map<int, Rational> terms;

  PiPolynomial() = default;
  explicit PiPolynomial(const PiRational& x);

  bool is_zero() const { return terms.empty(); }
  bool single_power() const { return terms.size() <= 1; }
  PiRational as_single() const;  // throws unless single_power()
  double to_double() const;
  std::string to_string() const;

  PiPolynomial& operator+=(const PiPolynomial& o);
  PiPolynomial& operator*=(const PiPolynomial& o);
  PiPolynomial& operator*=(const Rational& r);
};
PiPolynomial operator+(PiPolynomial a, const PiPolynomial& b);
PiPolynomial operator*(PiPolynomial a, const PiPolynomial& b);
PiPolynomial operator*(PiPolynomial a, const Rational& r);
bool operator==(const PiPolynomial& a, const PiPolynomial& b);

// zeta(2m) exactly, as a rational multiple of pi^{2m}.
PiRational zeta_even(int two_m);

}  // namespace mvq

#endif  // MVQ_EXACT_HPP_
