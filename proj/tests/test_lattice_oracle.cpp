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
#include <functional>

#include "mvq/lattice_oracle.hpp"
#include "mvq/volume.hpp"

using namespace mvq;

namespace {

// Direct enumeration of b, H with b . H <= N.
Integer brute_sum(const std::vector<int>& m, long N, const ParityConstraints& c) {
  const int k = static_cast<int>(m.size());
  Integer total = 0;
  std::vector<long> b(k, 1), H(k, 1);
  std::function<void(int, long)> rec = [&](int i, long used) {
    if (i == k) {
      for (const auto& row : c) {
        long s = 0;
        for (int j : row) s += b[j];
        if (s % 2) return;
      }
      Integer t = 1;
      for (int j = 0; j < k; ++j) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), b[j], m[j]);
        t *= p;
      }
      total += t;
      return;
    }
    for (b[i] = 1; used + b[i] <= N; ++b[i])
      for (H[i] = 1; used + b[i] * H[i] <= N; ++H[i]) rec(i + 1, used + b[i] * H[i]);
  };
  rec(0, 0);
  return total;
}

}  // namespace

TEST_CASE("lattice sums agree with direct enumeration") {
  for (long N : {1L, 5L, 17L, 40L}) {
    CHECK(lattice_sum({1}, N) == brute_sum({1}, N, {}));
    CHECK(lattice_sum({1, 3}, N) == brute_sum({1, 3}, N, {}));
    CHECK(lattice_sum({1, 3}, N, {{0, 1}}) == brute_sum({1, 3}, N, {{0, 1}}));
    CHECK(lattice_sum({0, 2, 1}, N, {{0, 1}, {1, 2}}) == brute_sum({0, 2, 1}, N, {{0, 1}, {1, 2}}));
    CHECK(lattice_sum({1}, N, {{0}}) == brute_sum({1}, N, {{0}}));
  }
}

TEST_CASE("large exponents fall back to exact big integers") {
  // 10000^12 exceeds 128 bits
  Integer s = lattice_sum({12}, 10000);
  Integer direct = 0;
  for (long b = 1; b <= 10000; ++b) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), b, 12);
    direct += p * (10000 / b);
  }
  CHECK(s == direct);
}

TEST_CASE("sublattice index") {
  CHECK(sublattice_index(2, {}) == 1);
  CHECK(sublattice_index(2, {{0, 1}}) == 2);
  CHECK(sublattice_index(3, {{0, 1}, {1, 2}, {0, 2}}) == 4);
  CHECK(sublattice_index(1, {{0}}) == 2);
  CHECK_THROWS(sublattice_index(2, {{2}}));
}

TEST_CASE("normalized sums approach the zeta limit") {
  auto r = lattice_check({1}, 10000);
  CHECK(r.limit == doctest::Approx(M_PI * M_PI / 12));
  CHECK(std::abs(r.relative_error()) < 0.01);
  auto full = lattice_check({1, 3}, 10000), half = lattice_check({1, 3}, 10000, {{0, 1}});
  CHECK(full.normalized / half.normalized == doctest::Approx(2).epsilon(0.02));
  // error decreases with N
  CHECK(std::abs(lattice_check({1, 1}, 4000).relative_error()) <
        std::abs(lattice_check({1, 1}, 400).relative_error()));
}

TEST_CASE("square-tiled counts approach the volumes") {
  auto rep = volume_convergence_report(2, 0, 2000);
  CHECK(rep.total_count / (std::pow(M_PI, 6) / 15) == doctest::Approx(1).epsilon(0.03));
  for (const auto& row : rep.rows) CHECK(std::abs(row.relative_error()) < 0.03);
  auto r04 = volume_convergence_report(0, 4, 5000);
  CHECK(std::abs(r04.relative_error()) < 0.01);
  StableGraph phi{{0, 1}, {{0, 0}, {0, 1}}, {}};
  CHECK(to_double(square_tiled_count(phi, 2000)) ==
        doctest::Approx(vol_graph(phi).to_double()).epsilon(0.03));
}

TEST_CASE("parity constraints of a graph") {
  StableGraph phi{{0, 1}, {{0, 0}, {0, 1}}, {}};
  auto c = graph_parity(phi);
  // the loop drops out, the bridge must be even at both ends
  REQUIRE(c.size() == 2);
  CHECK(c[0] == std::vector<int>{1});
  CHECK(sublattice_index(2, c) == 2);
}
