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

// psi-class intersection numbers <tau_{d_1} ... tau_{d_n}>_g.

#ifndef MVQ_CORRELATORS_HPP_
#define MVQ_CORRELATORS_HPP_

#include <vector>

#include "mvq/exact.hpp"

namespace mvq {

struct CorrelatorKey {
  int g = 0;
  std::vector<int> d;  // sorted ascending

  CorrelatorKey() = default;
  CorrelatorKey(int genus, std::vector<int> exps);
  int n() const { return static_cast<int>(d.size()); }
  bool stable() const { return 2 * g - 2 + n() > 0; }
};

// Exact value; zero when the degrees do not add up to 3g-3+n.
// Throws std::invalid_argument for unstable (g, n).
Rational correlator(int g, const std::vector<int>& d);
Rational correlator(const CorrelatorKey& key);

// <tau_{3g-2}>_g = 1/(24^g g!).
Rational one_point_closed_form(int g);

// 2^{|d|} prod (2d_i+1)!/d_i! <tau_d>_g.
Rational normalized_bracket(int g, const std::vector<int>& d);

// Ratio of a bracket to the extremal bracket [tau_0^{n-1} tau_{3g-3+n}], minus 1.
Rational epsilon_d(int g, const std::vector<int>& d);

// Weighted sum of 2k-point correlators over all ways to split each D_j
// into an ordered pair. D must be a composition of 3g-3+2k into k parts.
Rational c_gk(int g, int k, const std::vector<int>& D);

// Every nonzero value currently memoized.
struct CachedCorrelator {
  CorrelatorKey key;
  Rational value;
};
std::vector<CachedCorrelator> correlator_cache_snapshot();
void clear_correlator_cache();

}  // namespace mvq

#endif  // MVQ_CORRELATORS_HPP_
