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

#include <algorithm>
#include <functional>
#include <vector>

#include "mvq/correlators.hpp"
#include "support/structural.hpp"

using namespace mvq;

namespace {

// Genus zero: multinomial (n-3)! / prod d_i!.
Rational genus0_multinomial(const std::vector<int>& d) {
  Integer den = 1;
  for (int x : d) den *= factorial(x);
  return make_rational(factorial(static_cast<long>(d.size()) - 3), den);
}

void for_each_composition(int total, int parts, const std::function<void(std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(cur.size()) == parts - 1) {
      cur.push_back(left);
      f(cur);
      cur.pop_back();
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur.push_back(x);
      rec(left - x);
      cur.pop_back();
    }
  };
  rec(total);
}

}  // namespace

TEST_CASE("base values") {
  CHECK(correlator(0, {0, 0, 0}) == 1);
  CHECK(correlator(1, {1}) == Rational(1, 24));
  CHECK(correlator(2, {4}) == Rational(1, 1152));
  CHECK(correlator(2, {2, 3}) == Rational(29, 5760));
  CHECK(correlator(3, {7}) == Rational(1, 82944));
  CHECK(correlator(1, {1, 1}) == Rational(1, 24));
  CHECK(correlator(1, {0, 0, 3}) == Rational(1, 24));
}

TEST_CASE("genus zero agrees with the multinomial formula") {
  for (int n = 3; n <= 9; ++n)
    for_each_composition(n - 3, n, [&](std::vector<int>& d) { CHECK(correlator(0, d) == genus0_multinomial(d)); });
}

TEST_CASE("dimension mismatch gives zero and unstable input throws") {
  CHECK(correlator(1, {2}) == 0);
  CHECK(correlator(2, {1, 1}) == 0);
  CHECK_THROWS_AS(correlator(0, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(correlator(1, {}), std::invalid_argument);
}

TEST_CASE("one-point values follow the closed form") {
  for (int g = 1; g <= 12; ++g) CHECK(correlator(g, {3 * g - 2}) == one_point_closed_form(g));
  CHECK(one_point_closed_form(2) == Rational(1, 1152));
}

TEST_CASE("symmetric in the insertions") {
  std::vector<int> d = {0, 1, 2, 5};
  Rational ref = correlator(2, d);
  std::sort(d.begin(), d.end());
  do {
    CHECK(correlator(2, d) == ref);
  } while (std::next_permutation(d.begin(), d.end()));
}

TEST_CASE("string and dilaton equations hold on everything cached") {
  for (int g = 0; g <= 4; ++g)
    for (int n = 1; n <= 5; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      for_each_composition(3 * g - 3 + n, n, [&](std::vector<int>& d) { (void)correlator(g, d); });
    }
  size_t checked = 0;
  auto bad = testing::string_dilaton_violations(&checked);
  CHECK(bad.empty());
  CHECK(checked > 200);
}

TEST_CASE("genus-one two-point values") {
  // <tau_0 tau_2> = <tau_1> by the string equation, <tau_1^2> by dilaton
  CHECK(correlator(1, {0, 2}) == Rational(1, 24));
  CHECK(correlator(1, {1, 1}) == Rational(1, 24));
}

TEST_CASE("normalized brackets and epsilon") {
  // the extremal bracket has epsilon 0
  CHECK(epsilon_d(2, {0, 5}) == 0);
  CHECK(epsilon_d(3, {0, 8}) == 0);
  // two-point epsilon equals a_{g,k} - 1, which is negative in the bulk
  CHECK(epsilon_d(2, {2, 3}) == Rational(-4, 33));
  CHECK(normalized_bracket(1, {1}) == Rational(1, 2));
}

TEST_CASE("weighted split sums") {
  CHECK(c_gk(1, 1, {2}) == Rational(3, 4));
  CHECK_THROWS(c_gk(1, 1, {3}));
}

TEST_CASE("cache can be cleared and rebuilt") {
  Rational v = correlator(3, {2, 2, 3});
  clear_correlator_cache();
  CHECK(correlator_cache_snapshot().empty());
  CHECK(correlator(3, {2, 2, 3}) == v);
}
