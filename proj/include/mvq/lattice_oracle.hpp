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

// Finite lattice sums that converge to the Z-operator values, and finite
// square-tiled counts per stable graph.

#ifndef MVQ_LATTICE_ORACLE_HPP_
#define MVQ_LATTICE_ORACLE_HPP_

#include <string>
#include <vector>

#include "mvq/exact.hpp"
#include "mvq/stable_graph.hpp"

namespace mvq {

// Each constraint lists variable indices whose values must add up to an
// even number.
using ParityConstraints = std::vector<std::vector<int>>;

// Index of the sublattice cut out by the constraints (a power of two).
long long sublattice_index(int k, const ParityConstraints& c);

// Sum of prod b_i^{m_i} over positive integers b (in the sublattice) and
// H with b . H <= N.
Integer lattice_sum(const std::vector<int>& m, long N, const ParityConstraints& c = {});

struct LatticeCheck {
  double normalized = 0;  // lattice_sum / N^{|m|+k}
  double limit = 0;       // Z(b^m) / ((|m|+k)! index)
  double relative_error() const { return normalized / limit - 1; }
};
LatticeCheck lattice_check(const std::vector<int>& m, long N, const ParityConstraints& c = {});

// Per-vertex parity constraints of a stable graph.
ParityConstraints graph_parity(const StableGraph& G);

// 2d card(ST(2N) of type G) / N^d, using the counting polynomials.
Rational square_tiled_count(const StableGraph& G, long N);

struct ConvergenceRow {
  std::string key;
  StableGraph graph;
  double normalized_count = 0;
  double exact = 0;
  double relative_error() const { return exact == 0 ? 0 : normalized_count / exact - 1; }
};
struct ConvergenceReport {
  int g = 0, n = 0;
  long N = 0;
  std::vector<ConvergenceRow> rows;
  double total_count = 0, total_exact = 0;
  double relative_error() const { return total_count / total_exact - 1; }
};
ConvergenceReport volume_convergence_report(int g, int n, long N);

}  // namespace mvq

#endif  // MVQ_LATTICE_ORACLE_HPP_
