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

#include "mvq/multicurve_stats.hpp"
#include "mvq/volume.hpp"

using namespace mvq;

namespace {

const double kZeta3 = 1.2020569031595942;
StableGraph phi() { return StableGraph{{0, 1}, {{0, 0}, {0, 1}}, {}}; }
Rational q(const char* s) { return parse_rational(s); }

}  // namespace

TEST_CASE("normalizing constant") {
  // 2 * 2 * 4! * 2^5 for (2,0)
  CHECK(const_gn(2, 0) == 2 * 6 * 24 * 32);
  CHECK(const_gn(0, 4) == 2 * 2 * 1 * 2);
}

TEST_CASE("b_{0,n} closed form") {
  for (int n = 4; n <= 8; ++n) {
    PiRational closed(make_rational(1, factorial(n - 3)) / rpow(Rational(4), n - 3), 2 * (n - 3));
    CHECK(b_gn(0, n) == closed);
  }
}

TEST_CASE("frequencies of all weighted multicurves add up to b_{g,n}") {
  // (0,4): three one-edge graphs, weight H contributes 1/H^2 times the unit weight
  double sum = 0;
  for (const auto& e : enumerate(0, 4).entries) {
    if (e.graph.num_edges() == 0) continue;
    for (long H = 1; H <= 4000; ++H) sum += to_double(frequency({e.graph, {H}}));
  }
  CHECK(sum == doctest::Approx(b_gn(0, 4).to_double()).epsilon(1e-3));
}

TEST_CASE("six-punctured sphere split frequencies") {
  auto f = one_edge_split_frequencies(6);
  REQUIRE(f.size() == 2);
  CHECK(f.at(3) / f.at(2) == Rational(4, 3));
  // ten 3+3 graphs and fifteen 2+4 graphs
  Rational one33 = f.at(3) / 10, one24 = f.at(2) / 15;
  CHECK(one33 / one24 == 2);
}

TEST_CASE("cylinder distributions") {
  auto d = cylinder_distribution(2, 0);
  CHECK(d.at(1) == q("7/27"));
  CHECK(d.at(2) == q("15/27"));
  CHECK(d.at(3) == q("5/27"));
  Rational total = 0;
  for (const auto& [k, p] : cylinder_distribution(3, 0)) total += p;
  CHECK(total == 1);
  auto d12 = cylinder_distribution(1, 2);
  CHECK(d12.at(1) / d12.at(2) == Rational(5, 4));
}

TEST_CASE("unit heights on one-cylinder surfaces") {
  auto p = prob_unit_heights_one_cyl(2, 0);
  CHECK(p.pi_power == -6);
  CHECK(p.coeff == 945);
}

TEST_CASE("expectations with fixed heights") {
  for (long h1 = 1; h1 <= 5; ++h1)
    for (long h2 = 1; h2 <= 5; ++h2) {
      auto e = expectation_ratio(phi(), {1, 0}, {0, 1}, std::vector<long>{h1, h2});
      REQUIRE(e.exact);
      CHECK(*e.exact == Rational(2, 3) * Rational(h2) / Rational(h1));
    }
  CHECK(expectation_ratio_in_heights(phi(), {1, 0}, {0, 1}) == "2/3 · H2 / H1");
  auto two = single_vertex_loops(2, 2);
  auto e = expectation_ratio(two, {1, 0}, {0, 1}, std::vector<long>{3, 3});
  CHECK(*e.exact == Rational(7, 3));
}

TEST_CASE("expectations averaged over heights") {
  auto e = expectation_ratio(phi(), {1, 0}, {0, 1});
  CHECK_FALSE(e.infinite);
  double closed = 2.0 / 3 * kZeta3 * kZeta3 / (std::pow(M_PI, 6) / 540);
  CHECK(e.value == doctest::Approx(closed).epsilon(1e-12));
  REQUIRE(e.zeta);
  CHECK(e.zeta->to_double() == doctest::Approx(closed).epsilon(1e-12));
  auto inf = expectation_ratio(phi(), {0, 1}, {1, 0});
  CHECK(inf.infinite);
  CHECK(std::isinf(inf.value));
}

TEST_CASE("height probabilities") {
  auto p = prob_heights(phi(), {1, 1});
  CHECK(p.exact.coeff == 540);
  CHECK(p.exact.pi_power == -6);
  CHECK(p.value == doctest::Approx(0.561687).epsilon(1e-6));
  auto two = single_vertex_loops(2, 2);
  auto p2 = prob_heights(two, {2, 2});
  CHECK(p2.exact.coeff == q("85/64") * 540);
  CHECK(p2.value == doctest::Approx(0.745991).epsilon(1e-6));
  CHECK(prob_heights(phi(), {}).value == doctest::Approx(1.0));
  // probabilities increase with the bound and stay below 1
  double last = 0;
  for (long b = 1; b <= 6; ++b) {
    double v = prob_heights(two, {b, b}).value;
    CHECK(v > last);
    CHECK(v < 1);
    last = v;
  }
}

TEST_CASE("simplex density integrates to its Dirichlet value") {
  CHECK(dirichlet_integral({1, 3}) == Rational(1, 120));
  auto two = single_vertex_loops(2, 2);
  std::vector<long> H = {1, 2};
  // midpoint rule on a fine grid over the triangle
  const int M = 800;
  double s = 0;
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      double x = (i + 0.5) / M, y = (j + 0.5) / M;
      if (x + y < 1) s += ztilde_density(two, H, {x, y});
    }
  s /= double(M) * M;
  double exact = to_double(ztilde_integral(two, H));
  CHECK(s == doctest::Approx(exact).epsilon(5e-3));
  // uniform 1/d! relation with the Y operator for graph polynomials
  CHECK(ztilde_integral(two, H) == op_Y(H, graph_polynomial(two)) / Rational(factorial(6)));
}
