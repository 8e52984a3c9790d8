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

// Large-genus toolkit: normalized two-point correlators, one-cylinder and
// separating contributions, multiple harmonic sums, Poisson model.

#ifndef MVQ_ASYMPTOTICS_HPP_
#define MVQ_ASYMPTOTICS_HPP_

#include <map>
#include <vector>

#include "mvq/exact.hpp"

namespace mvq {

// a_{g,k} for k = 0 .. 3g-1.
struct AgkSequence {
  int g = 0;
  std::vector<Rational> values;
};

// Built from a_{g,0} = 1 with the explicit difference formula, then
// completed by the symmetry k <-> 3g-1-k.
AgkSequence agk_by_recursion(int g);
// Built directly from two-point correlators.
AgkSequence agk_from_correlators(int g);
// <tau_k tau_{3g-1-k}>_g recovered from a_{g,k}.
Rational two_point_from_agk(const AgkSequence& a, int k);

struct RPQ {
  Rational R, P1, P2, P3, Q;
};
RPQ rpq(int g, int j);

// Vol of the single-vertex one-loop graph of genus g (g >= 2), exact.
PiRational vol_gamma1(int g);
// sqrt(2/(3 pi g)) (8/3)^{4g-4}
double vol_gamma1_asymptotic(int g);
// Two vertices of genus g1, g2 joined by one edge.
PiRational vol_delta(int g1, int g2);
// Single vertex of genus g-k with k loops.
PiRational vol_gamma_k(int g, int k);

// Vol(Gamma_1(g+1)) / zeta(6g) and the two explicit bounds around it.
struct Gamma1Sandwich {
  Rational lower, value, upper;
  bool holds() const { return lower <= value && value <= upper; }
};
Gamma1Sandwich gamma1_sandwich(int g);

// Separating over non-separating one-curve contributions in genus g.
Rational sep_nonsep_ratio(int g);
// sqrt(2/(3 pi g)) / 4^g
double sep_nonsep_asymptotic(int g);

// sum_{g1=1}^{g-1} C(g,g1) C(3g-4, 3g1-2) and its normalized value
// S(g) sqrt(6 pi g) / 2^{4g-4}.
Integer binomial_product_sum(int g);
double binomial_product_sum_normalized(int g);

// Multiple harmonic sums over compositions j_1 + .. + j_k = m.
Rational harmonic_H(int k, int m);
PiRational harmonic_Z(int k, int m);
// Floating versions for large m.
double harmonic_H_float(int k, int m);
double harmonic_Z_float(int k, int m);

struct SeriesCoefficients {
  std::vector<double> c, A, B;
};
SeriesCoefficients series_coeffs(int max_j);

struct SeriesCheck {
  double sum_A_half, target_A_half;      // sum A_j / 2^j, 2/sqrt(pi)
  double sum_B_half, target_B_half;      // sum B_j / 2^j, 2 sqrt(2/pi)
  double sum_jA_half, target_jA_half;    // sum j A_j / 2^{j-1}
  double sum_jB_half, target_jB_half;    // sum j B_j / 2^{j-1}
  double max_recurrence_error;           // residual of the defining recurrences
};
SeriesCheck series_checks(int terms = 60);

// m H_k(m)/k! (resp. m Z_k(m)/k!) minus the truncated log expansion.
struct ExpansionResidual {
  double eps_H, eps_Z;
};
ExpansionResidual expansion_residual(int k, int m);

struct PoissonModel {
  double lambda = 0;
  std::map<int, double> pmf;  // k >= 1 -> p(k-1; lambda)
  double tv_distance = -1;    // negative when no exact distribution given
};
double poisson_lambda(int g);
// Total variation against the exact cylinder distribution is computed
// when `exact` is nonempty.
PoissonModel poisson_model(int g, const std::map<int, Rational>& exact = {});

}  // namespace mvq

#endif  // MVQ_ASYMPTOTICS_HPP_
