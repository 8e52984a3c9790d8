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

// Multicurve frequencies and statistics of square-tiled surfaces.

#ifndef MVQ_MULTICURVE_STATS_HPP_
#define MVQ_MULTICURVE_STATS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvq/exact.hpp"
#include "mvq/polynomial.hpp"
#include "mvq/stable_graph.hpp"

namespace mvq {

struct Multicurve {
  StableGraph graph;
  std::vector<long> weights;  // one positive height per edge
};

// 2 (6g-6+2n) (4g-4+n)! 2^{4g-3+n}
Integer const_gn(int g, int n);

Rational frequency(const Multicurve& m);
PiRational b_gn(int g, int n);

// Share of the volume carried by graphs with k edges.
std::map<int, Rational> cylinder_distribution(int g, int n);

// Probability that a one-cylinder surface has unit height: 1/zeta(6g-6+2n).
PiQuotient prob_unit_heights_one_cyl(int g, int n);

// Frequencies of one-edge multicurves with unit weight on the n-punctured
// sphere, summed by the smaller side of the leg split.
std::map<int, Rational> one_edge_split_frequencies(int n);

// Linear combination of terms coeff * pi^p * prod zeta(s_j), s_j odd >= 3.
struct ZetaExpression {
  std::map<std::pair<int, std::vector<int>>, Rational> terms;
  void add(const Rational& c, int pi_power, std::vector<int> odd_zetas);
  double to_double() const;
  std::string to_string() const;
};

struct Expectation {
  bool infinite = false;
  double value = 0;                     // +inf when infinite
  std::optional<Rational> exact;        // fixed heights
  std::optional<ZetaExpression> zeta;   // free heights
  std::string symbolic;
};

// Expectation of prod b^num / prod b^den over surfaces of type G, either
// with fixed heights H or averaged over all heights.
// Throws std::domain_error("indeterminate") when divergent terms of
// opposite sign occur.
Expectation expectation_ratio(const StableGraph& G, const std::vector<int>& num,
                              const std::vector<int>& den,
                              const std::optional<std::vector<long>>& H = std::nullopt);

// Same with fixed symbolic heights: the ratio as a rational function of
// H, printed, when the denominator is a single monomial in 1/H.
std::string expectation_ratio_in_heights(const StableGraph& G, const std::vector<int>& num,
                                         const std::vector<int>& den);

struct HeightProbability {
  PiQuotient exact;
  double value = 0;
};

// Probability that heights satisfy H_i <= bound_i for every edge; an empty
// bound means no constraint.
HeightProbability prob_heights(const StableGraph& G, const std::vector<long>& bound);

// Density prod x^m / H^{m+1} applied to P_G at x; zero outside the simplex.
double ztilde_density(const StableGraph& G, const std::vector<long>& H,
                      const std::vector<double>& x);
// Exact integral of that density over the simplex (Dirichlet integrals).
Rational ztilde_integral(const StableGraph& G, const std::vector<long>& H);
// Dirichlet integral of prod x^m over the standard simplex.
Rational dirichlet_integral(const std::vector<int>& m);

}  // namespace mvq

#endif  // MVQ_MULTICURVE_STATS_HPP_
