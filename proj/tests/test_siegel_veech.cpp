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

#include "mvq/reference.hpp"
#include "mvq/siegel_veech.hpp"
#include "mvq/volume.hpp"

using namespace mvq;

TEST_CASE("edge derivative of the genus-two graphs") {
  auto two_loops = single_vertex_loops(2, 2);
  auto P = graph_polynomial(two_loops);
  // both edges are non-bridges: b_e dP/db_e at b_e = 0 keeps the linear part
  auto d = partial_gamma(two_loops, P);
  auto expected = EdgePolynomial::monomial({1, 3}, Rational(8, 5));
  expected += EdgePolynomial::monomial({3, 1}, Rational(8, 5));
  CHECK(d == expected);

  StableGraph phi{{0, 1}, {{0, 0}, {0, 1}}, {}};
  auto dphi = partial_gamma(phi, graph_polynomial(phi));
  CHECK(op_Z(dphi) == PiRational(Rational(1, 675), 6));
}

TEST_CASE("reference constants and Lyapunov sums") {
  for (const auto& row : reference_table()) {
    CAPTURE(row.g);
    CAPTURE(row.n);
    CHECK(c_area_graphsum(row.g, row.n).normalized == row.c_area_times_pi2_over_3);
    CHECK(lyapunov_sum_plus(row.g, row.n) == row.lambda_plus);
  }
}

TEST_CASE("boundary formula matches the graph sum") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{
           {0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {2, 2}, {3, 0}}) {
    CAPTURE(g);
    CAPTURE(n);
    auto r = siegel_veech_report(g, n, true, true);
    CHECK(r.methods_agree());
    auto b = c_area_boundary(g, n);
    CHECK(b.single_power());
    CHECK(b.as_single() * PiRational(Rational(1, 3), 2) == c_area_graphsum(g, n).product);
  }
}

TEST_CASE("boundary formula refuses out-of-range strata") {
  CHECK_THROWS_AS(c_area_boundary(1, 1), OutOfHypothesis);
  CHECK_THROWS_AS(c_area_boundary(0, 3), OutOfHypothesis);
  CHECK_THROWS_AS(siegel_veech_report(1, 1, false, true), OutOfHypothesis);
  CHECK_THROWS(siegel_veech_report(2, 0, false, false));
}

TEST_CASE("boundary volumes use the thrice-punctured sphere convention") {
  CHECK(boundary_volume(0, 3) == PiRational(Rational(4), 0));
  CHECK(boundary_volume(1, 1) == PiRational(Rational(2, 3), 2));
  CHECK(boundary_volume(2, 0) == masur_veech_volume(2, 0).total);
}

TEST_CASE("genus-zero Lyapunov sums vanish") {
  for (int n = 4; n <= 8; ++n) CHECK(lyapunov_sum_plus(0, n) == 0);
}
