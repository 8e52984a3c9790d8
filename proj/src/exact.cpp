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

#include "mvq/exact.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

namespace mvq {

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double factorial below -1");
  if (n <= 0) return 1;
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli index must be >= 0");
  static std::mutex mu;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{k<=m} C(m+1,k) B_k = 0
  while (static_cast<int>(memo.size()) <= n) {
    long m = static_cast<long>(memo.size());
    Rational s = 0;
    for (long k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * memo[k];
    Rational b = -s / Rational(m + 1);
    b.canonicalize();
    memo.push_back(b);
  }
  return memo[n];
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double to_double(const Rational& q) { return q.get_d(); }

Rational rpow(const Rational& base, long e) {
  if (e < 0) {
    if (sgn(base) == 0) throw std::domain_error("zero to negative power");
    return Rational(1) / rpow(base, -e);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(n, d);
}

namespace {

std::string pi_suffix(int p) {
  if (p == 0) return "";
  if (p == 1) return " · π";
  return " · π^" + std::to_string(p);
}

double pi_pow(int p) {
  return std::pow(std::numbers::pi_v<double>, static_cast<double>(p));
}

}  // namespace

PiRational::PiRational(Rational c, int p) : coeff(std::move(c)), pi_power(p) {
  coeff.canonicalize();
  if (sgn(coeff) == 0) pi_power = 0;
}

double PiRational::to_double() const {
  return mvq::to_double(coeff) * pi_pow(pi_power);
}

std::string PiRational::to_string() const {
  return mvq::to_string(coeff) + pi_suffix(pi_power);
}

PiRational& PiRational::operator+=(const PiRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (pi_power != o.pi_power)
    throw std::logic_error("adding values with different powers of pi");
  coeff += o.coeff;
  if (sgn(coeff) == 0) pi_power = 0;
  return *this;
}

PiRational& PiRational::operator-=(const PiRational& o) {
  return *this += PiRational(-o.coeff, o.pi_power);
}

PiRational& PiRational::operator*=(const PiRational& o) {
  coeff *= o.coeff;
  pi_power = sgn(coeff) == 0 ? 0 : pi_power + o.pi_power;
  return *this;
}

PiRational& PiRational::operator*=(const Rational& r) {
  coeff *= r;
  if (sgn(coeff) == 0) pi_power = 0;
  return *this;
}

PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
PiRational operator-(PiRational a, const PiRational& b) { return a -= b; }
PiRational operator*(PiRational a, const PiRational& b) { return a *= b; }
PiRational operator*(PiRational a, const Rational& r) { return a *= r; }
PiRational operator*(const Rational& r, PiRational a) { return a *= r; }
bool operator==(const PiRational& a, const PiRational& b) {
  return a.coeff == b.coeff && a.pi_power == b.pi_power;
}

double PiQuotient::to_double() const {
  return mvq::to_double(coeff) * pi_pow(pi_power);
}

std::string PiQuotient::to_string() const {
  if (pi_power >= 0) return mvq::to_string(coeff) + pi_suffix(pi_power);
  return mvq::to_string(coeff) + " / π^" + std::to_string(-pi_power);
}

PiQuotient divide(const PiRational& a, const PiRational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  PiQuotient q;
  q.coeff = a.coeff / b.coeff;
  q.coeff.canonicalize();
  q.pi_power = a.is_zero() ? 0 : a.pi_power - b.pi_power;
  return q;
}

bool operator==(const PiQuotient& a, const PiQuotient& b) {
  return a.coeff == b.coeff && a.pi_power == b.pi_power;
}

PiPolynomial::PiPolynomial(const PiRational& x) {
  if (!x.is_zero()) terms[x.pi_power] = x.coeff;
}

PiRational PiPolynomial::as_single() const {
  if (!single_power()) throw std::logic_error("mixed powers of pi");
  if (terms.empty()) return {};
  return {terms.begin()->second, terms.begin()->first};
}

double PiPolynomial::to_double() const {
  double s = 0;
  for (const auto& [p, c] : terms) s += mvq::to_double(c) * pi_pow(p);
  return s;
}

std::string PiPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += mvq::to_string(it->second) + pi_suffix(it->first);
  }
  return out;
}

PiPolynomial& PiPolynomial::operator+=(const PiPolynomial& o) {
  for (const auto& [p, c] : o.terms) {
    Rational& slot = terms[p];
    slot += c;
    if (sgn(slot) == 0) terms.erase(p);
  }
  return *this;
}

PiPolynomial& PiPolynomial::operator*=(const PiPolynomial& o) {
  PiPolynomial out;
  for (const auto& [p, c] : terms)
    for (const auto& [q, d] : o.terms) out += PiPolynomial(PiRational(c * d, p + q));
  return *this = out;
}

PiPolynomial& PiPolynomial::operator*=(const Rational& r) {
  if (sgn(r) == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [p, c] : terms) c *= r;
  return *this;
}

PiPolynomial operator+(PiPolynomial a, const PiPolynomial& b) { return a += b; }
PiPolynomial operator*(PiPolynomial a, const PiPolynomial& b) { return a *= b; }
PiPolynomial operator*(PiPolynomial a, const Rational& r) { return a *= r; }
bool operator==(const PiPolynomial& a, const PiPolynomial& b) {
  return a.terms == b.terms;
}

PiRational zeta_even(int two_m) {
  if (two_m < 2 || two_m % 2 != 0)
    throw std::invalid_argument("zeta_even needs a positive even argument");
  int m = two_m / 2;
  // (-1)^{m+1} B_{2m} 2^{2m} / (2 (2m)!)
  Rational c = bernoulli(two_m) * Rational(Integer(1) << two_m) /
               Rational(2 * factorial(two_m));
  if (m % 2 == 0) c = -c;
  return {c, two_m};
}

}  // namespace mvq
