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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "mvq/exact.hpp"
#include "mvq/polynomial.hpp"

using namespace mvq;

namespace {

// Bernoulli numbers by the Akiyama-Tanigawa table (gives B_1 = +1/2).
std::vector<Rational> akiyama_tanigawa(int n) {
  std::vector<Rational> a(n + 1), out;
  for (int m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

double zeta_by_sum(int s) {
  const int N = 200000;
  double z = 0;
  for (int k = N; k >= 1; --k) z += std::pow(k, -s);
  // Euler-Maclaurin tail
  return z + std::pow(N, 1 - s) / (s - 1) - 0.5 * std::pow(N, -s);
}

}  // namespace

TEST_CASE("factorials and binomials agree with direct products") {
  Integer f = 1;
  for (int n = 1; n <= 30; ++n) {
    f *= n;
    CHECK(factorial(n) == f);
  }
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(9) == 945);
  CHECK(double_factorial(10) == 3840);
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binomial(n, k) * factorial(k) * factorial(n - k) == factorial(n));
}

TEST_CASE("Bernoulli numbers match an independent table") {
  auto ref = akiyama_tanigawa(40);
  for (int n = 2; n <= 40; ++n) CHECK(bernoulli(n) == ref[n]);
  CHECK(bernoulli(0) == 1);
}

TEST_CASE("even zeta values are rational multiples of pi powers") {
  for (int s = 2; s <= 12; s += 2) {
    PiRational z = zeta_even(s);
    CHECK(z.pi_power == s);
    CHECK(z.to_double() == doctest::Approx(zeta_by_sum(s)).epsilon(1e-9));
  }
  CHECK(zeta_even(2) == PiRational(Rational(1, 6), 2));
  CHECK(zeta_even(4) == PiRational(Rational(1, 90), 4));
}

TEST_CASE("pi-scaled arithmetic") {
  PiRational a(Rational(1, 3), 4), b(Rational(1, 6), 4);
  CHECK((a + b) == PiRational(Rational(1, 2), 4));
  CHECK((a * b) == PiRational(Rational(1, 18), 8));
  CHECK_THROWS((a + PiRational(Rational(1), 2)));
  CHECK((a - a).is_zero());
  CHECK(a.to_string() == "1/3 · π^4");
  PiQuotient q = divide(PiRational(Rational(1), 0), PiRational(Rational(1, 540), 6));
  CHECK(q.coeff == 540);
  CHECK(q.pi_power == -6);
  PiPolynomial p(a);
  p += PiPolynomial(PiRational(Rational(2), 2));
  CHECK_FALSE(p.single_power());
  CHECK_THROWS(p.as_single());
}

TEST_CASE("rational parsing round-trips") {
  for (const char* s : {"0", "7", "-3/4", "2106241/11548293120"})
    CHECK(to_string(parse_rational(s)) == std::string(s));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(rpow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("edge polynomials") {
  auto p = EdgePolynomial::monomial({1, 3}, Rational(2, 15));
  CHECK(p.homogeneous_degree() == 4);
  CHECK(p.all_exponents_odd());
  auto q = p * EdgePolynomial::monomial({1, 0});
  CHECK(q.coefficient({2, 3}) == Rational(2, 15));
  // x1 x2^2 x3 with x1 -> b0, x2 -> b1, x3 -> 0 vanishes
  auto r = EdgePolynomial::monomial({1, 2, 1}).substitute({0, 1, -1}, 2);
  CHECK(r.is_zero());
  // loop: both ends feed the same variable
  auto s = EdgePolynomial::monomial({2, 0, 2}).substitute({0, 1, 0}, 2);
  CHECK(s.coefficient({4, 0}) == 1);
}
