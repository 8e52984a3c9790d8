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

// Area Siegel-Veech constants and the sum of positive Lyapunov exponents.

#ifndef MVQ_SIEGEL_VEECH_HPP_
#define MVQ_SIEGEL_VEECH_HPP_

#include <optional>

#include "mvq/exact.hpp"
#include "mvq/polynomial.hpp"
#include "mvq/stable_graph.hpp"

namespace mvq {

// Sum over edges of w(e) b_e dP/db_e at b_e = 0, with w = 1/2 on bridges.
EdgePolynomial partial_gamma(const StableGraph& G, const EdgePolynomial& P);
// Single-edge summand (weight included).
EdgePolynomial partial_edge(const StableGraph& G, const EdgePolynomial& P, int e);

struct CareaResult {
  PiRational product;        // (pi^2/3) c_area Vol = sum of Z(partial P)
  Rational normalized;       // (pi^2/3) c_area
};

CareaResult c_area_graphsum(int g, int n);

// c_area * Vol from the principal boundary; pi^2/3 times this equals
// c_area_graphsum(g, n).product. Throws OutOfHypothesis for (1,0), (1,1)
// and genus 0 with n < 4.
PiPolynomial c_area_boundary(int g, int n);

// Volume with the conventions used at the boundary: Q_{0,3} = 4.
PiRational boundary_volume(int g, int n);

// (1/24)(5l/3 - 3n) + (pi^2/3) c_area with l = 4g - 4 + n.
Rational lyapunov_sum_plus(int g, int n);

struct SiegelVeechReport {
  int g = 0, n = 0;
  PiRational product;                     // from the graph sum
  Rational c_area_times_pi2_over_3;       // from the graph sum
  std::optional<Rational> boundary_value; // same quantity from the boundary
  Rational lambda_plus;
  bool methods_agree() const {
    return !boundary_value || *boundary_value == c_area_times_pi2_over_3;
  }
};

// with_graph / with_boundary select the methods; at least one must be set.
// The boundary-only report leaves product empty and fills the normalized
// value from the boundary formula.
SiegelVeechReport siegel_veech_report(int g, int n, bool with_graph, bool with_boundary);

}  // namespace mvq

#endif  // MVQ_SIEGEL_VEECH_HPP_
