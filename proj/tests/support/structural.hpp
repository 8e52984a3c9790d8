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

// Checks shared by the unit tests and the acceptance runner.

#ifndef MVQ_TESTS_STRUCTURAL_HPP_
#define MVQ_TESTS_STRUCTURAL_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "mvq/correlators.hpp"
#include "mvq/volume.hpp"

namespace mvq::testing {

// Walks every cached correlator containing tau_0 or tau_1 and re-derives it
// from the string or dilaton equation. Returns the keys that disagree.
inline std::vector<std::string> string_dilaton_violations(size_t* checked = nullptr) {
  std::vector<std::string> bad;
  size_t count = 0;
  for (const auto& entry : correlator_cache_snapshot()) {
    const int g = entry.key.g;
    const auto& d = entry.key.d;
    const int n = static_cast<int>(d.size());
    if (n < 2 || 2 * g - 2 + (n - 1) <= 0) continue;  // reduced key unstable
    for (int marked : {0, 1}) {
      auto it = std::find(d.begin(), d.end(), marked);
      if (it == d.end()) continue;
      std::vector<int> rest(d.begin(), d.end());
      rest.erase(rest.begin() + (it - d.begin()));
      Rational expect = 0;
      if (marked == 0) {
        for (size_t j = 0; j < rest.size(); ++j) {
          if (rest[j] == 0) continue;
          auto r = rest;
          --r[j];
          expect += correlator(g, r);
        }
      } else {
        expect = Rational(2 * g - 2 + n - 1) * correlator(g, rest);
      }
      ++count;
      if (expect != entry.value) {
        std::string k = "g=" + std::to_string(g) + " d=";
        for (int x : d) k += std::to_string(x) + ",";
        bad.push_back(k);
      }
    }
  }
  if (checked) *checked = count;
  return bad;
}

// Number of graphs of type (g, n) whose polynomial has an even exponent.
inline int even_exponent_graphs(int g, int n) {
  int bad = 0;
  for (const auto& e : enumerate(g, n).entries) {
    if (e.graph.num_edges() == 0) continue;
    if (!graph_polynomial(e.graph).all_exponents_odd()) ++bad;
  }
  return bad;
}

}  // namespace mvq::testing

#endif  // MVQ_TESTS_STRUCTURAL_HPP_
