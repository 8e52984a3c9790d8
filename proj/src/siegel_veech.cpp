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

#include "mvq/siegel_veech.hpp"

#include <stdexcept>

#include "mvq/volume.hpp"

namespace mvq {

namespace {

// dimension and "ell" of a stratum
int dim_of(int g, int n) { return 6 * g - 6 + 2 * n; }
int ell_of(int g, int n) { return 4 * g - 4 + n; }

// (d_i - 1)! / ell_i!, with the value 1/2 at (0, 3) where both
// factorials have argument -1.
Rational boundary_ratio(int g, int n) {
  if (g == 0 && n == 3) return Rational(1, 2);
  return Rational(factorial(dim_of(g, n) - 1)) / Rational(factorial(ell_of(g, n)));
}

}  // namespace

EdgePolynomial partial_edge(const StableGraph& G, const EdgePolynomial& P, int e) {
  EdgePolynomial out(P.nvars());
  Rational w = is_bridge(G, e) ? Rational(1, 2) : Rational(1);
  for (const auto& [m, c] : P.terms())
    if (m[e] == 1) out.add_term(m, w * c);
  return out;
}

EdgePolynomial partial_gamma(const StableGraph& G, const EdgePolynomial& P) {
  if (P.nvars() != G.num_edges())
    throw std::invalid_argument("polynomial must have one variable per edge");
  EdgePolynomial out(P.nvars());
  for (int e = 0; e < G.num_edges(); ++e) out += partial_edge(G, P, e);
  return out;
}

CareaResult c_area_graphsum(int g, int n) {
  const VolumeReport& rep = masur_veech_volume(g, n);
  CareaResult r;
  for (const auto& gv : rep.per_graph) {
    EdgePolynomial P = graph_polynomial(gv.graph, gv.aut_order);
    r.product += op_Z(partial_gamma(gv.graph, P));
  }
  if (rep.total.is_zero()) throw std::invalid_argument("stratum has zero volume");
  PiQuotient q = divide(r.product, rep.total);
  if (q.pi_power != 0 && sgn(q.coeff) != 0)
    throw std::logic_error("normalized Siegel-Veech constant is not rational");
  r.normalized = q.coeff;
  return r;
}

PiRational boundary_volume(int g, int n) {
  if (g == 0 && n == 3) return {4, 0};
  return masur_veech_volume(g, n).total;
}

PiPolynomial c_area_boundary(int g, int n) {
  if (g < 0 || n < 0 || (g == 0 && n < 4) || (g == 1 && n < 2))
    throw OutOfHypothesis("boundary formula does not apply to (" + std::to_string(g) +
                          ", " + std::to_string(n) + ")");
  const int d = dim_of(g, n), ell = ell_of(g, n);
  PiPolynomial total;

  PiPolynomial sep;
  for (int g1 = 0; g1 <= g; ++g1) {
    int g2 = g - g1;
    for (int n1 = 1; n1 <= n + 1; ++n1) {
      int n2 = n + 2 - n1;
      if (dim_of(g1, n1) < 0 || dim_of(g2, n2) < 0) continue;
      Rational w = Rational(factorial(n)) /
                   Rational(factorial(n1 - 1) * factorial(n2 - 1));
      w *= boundary_ratio(g1, n1) * boundary_ratio(g2, n2);
      PiRational term = boundary_volume(g1, n1) * boundary_volume(g2, n2) * w;
      sep += PiPolynomial(term);
    }
  }
  sep *= Rational(factorial(ell)) / Rational(factorial(d - 1)) / 8;
  total += sep;

  if (g >= 1) {
    Rational w = Rational(ell * (ell - 1)) / Rational((d - 1) * (d - 2));
    total += PiPolynomial(boundary_volume(g - 1, n + 2) * w);
  }
  return total;
}

Rational lyapunov_sum_plus(int g, int n) {
  Rational ell = 4 * g - 4 + n;
  return (ell * Rational(5, 3) - 3 * n) / 24 + c_area_graphsum(g, n).normalized;
}

SiegelVeechReport siegel_veech_report(int g, int n, bool with_graph, bool with_boundary) {
  if (!with_graph && !with_boundary) throw std::invalid_argument("no method selected");
  SiegelVeechReport r;
  r.g = g;
  r.n = n;
  if (with_boundary) {
    PiRational prod = c_area_boundary(g, n).as_single() * PiRational(Rational(1, 3), 2);
    PiQuotient q = divide(prod, masur_veech_volume(g, n).total);
    if (q.pi_power != 0) throw std::logic_error("boundary value is not rational");
    r.boundary_value = q.coeff;
  }
  if (with_graph) {
    auto c = c_area_graphsum(g, n);
    r.product = c.product;
    r.c_area_times_pi2_over_3 = c.normalized;
  } else {
    r.c_area_times_pi2_over_3 = *r.boundary_value;
  }
  Rational ell = 4 * g - 4 + n;
  r.lambda_plus = (ell * Rational(5, 3) - 3 * n) / 24 + r.c_area_times_pi2_over_3;
  return r;
}

}  // namespace mvq
