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

// Masur-Veech volumes of the principal strata of quadratic differentials,
// assembled from stable graphs.

#ifndef MVQ_VOLUME_HPP_
#define MVQ_VOLUME_HPP_

#include <map>
#include <string>
#include <vector>

#include "mvq/exact.hpp"
#include "mvq/polynomial.hpp"
#include "mvq/stable_graph.hpp"

namespace mvq {

// Top-degree Kontsevich counting polynomial in n boundary lengths.
const EdgePolynomial& kontsevich_poly(int g, int n);

// 2^{6g-5+2n} (4g-4+n)! / (6g-7+2n)!
Rational graph_prefactor(int g, int n);

// Polynomial in the edge lengths of G (one variable per edge, in stored
// edge order). Throws for the graph without edges.
EdgePolynomial graph_polynomial(const StableGraph& G);
EdgePolynomial graph_polynomial(const StableGraph& G, long long aut);
// Product of edge variables and vertex polynomials, no constant factors.
EdgePolynomial raw_graph_polynomial(const StableGraph& G);

// b^m -> prod m_i! zeta(m_i + 1). Every exponent must be odd.
PiRational op_Z(const EdgePolynomial& P);
// b^m -> prod m_i! / H_i^{m_i + 1}.
Rational op_Y(const std::vector<long>& H, const EdgePolynomial& P);

PiRational vol_graph(const StableGraph& G);
Rational vol_multicurve(const StableGraph& G, const std::vector<long>& H);

struct GraphVolume {
  std::string key;
  StableGraph graph;
  long long aut_order = 1;
  PiRational volume;
};

struct VolumeReport {
  int g = 0;
  int n = 0;
  PiRational total;
  std::vector<GraphVolume> per_graph;  // catalog order, edge-less graph omitted
  std::map<int, PiRational> per_cylinder_count;
};

// Memoized per (g, n). threads <= 0 picks the hardware width.
const VolumeReport& masur_veech_volume(int g, int n, int threads = 0);

// pi^{2n-6} / 2^{n-5}
PiRational genus0_volume(int n);

// dim_C Q_{g,n} = 6g - 6 + 2n
inline int stratum_dimension(int g, int n) { return 6 * g - 6 + 2 * n; }

}  // namespace mvq

#endif  // MVQ_VOLUME_HPP_
