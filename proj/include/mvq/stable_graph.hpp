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

// Genus-decorated multigraphs with labeled legs.

#ifndef MVQ_STABLE_GRAPH_HPP_
#define MVQ_STABLE_GRAPH_HPP_

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mvq {

// Half-edge presentation: half-edges 2e and 2e+1 form edge e, then one
// half-edge per leg. attach maps a half-edge to its vertex, pairing is the
// involution (legs are fixed points), leg_label is 0 for paired half-edges.
struct HalfEdgeView {
  int num_vertices = 0;
  std::vector<int> attach;
  std::vector<int> pairing;
  std::vector<int> genus;
  std::vector<int> leg_label;
};

struct StableGraph {
  std::vector<int> genus;                  // g_v per vertex
  std::vector<std::pair<int, int>> edges;  // endpoints, first <= second
  std::vector<int> legs;                   // legs[i] = vertex of leg i+1

  int num_vertices() const { return static_cast<int>(genus.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_legs() const { return static_cast<int>(legs.size()); }
  // h^1 + sum of vertex genera
  int total_genus() const;
  // half-edges at v; a loop counts twice
  int valence(int v) const;
  int loops_at(int v) const;
  bool connected() const;
  bool is_loop(int e) const { return edges[e].first == edges[e].second; }

  // Throws std::invalid_argument unless this is a valid stable graph of
  // type (g, n).
  void validate(int g, int n) const;
  void validate() const;

  HalfEdgeView half_edges() const;
  std::string to_string() const;

  friend bool operator==(const StableGraph& a, const StableGraph& b) {
    return a.genus == b.genus && a.edges == b.edges && a.legs == b.legs;
  }
};

struct CanonicalForm {
  StableGraph graph;  // relabeled representative, edges sorted
  std::string key;    // equal iff isomorphic
  long long aut_order = 1;
};

CanonicalForm canonicalize(const StableGraph& g);
long long aut_order(const StableGraph& g);
bool is_bridge(const StableGraph& g, int e);

struct CatalogEntry {
  StableGraph graph;
  long long aut_order = 1;
  std::string key;
};

struct GraphCatalog {
  int g = 0;
  int n = 0;
  std::vector<CatalogEntry> entries;  // by edge count, then key
};

// All isomorphism classes of stable graphs of type (g, n), including the
// graph without edges. Results are memoized per (g, n).
const GraphCatalog& enumerate(int g, int n);

// Cutting an edge: a non-bridge yields one graph with new legs n+1 and
// n+2; a bridge yields two graphs whose legs are renumbered in order and
// whose new leg is the last one.
using CutResult = std::variant<StableGraph, std::pair<StableGraph, StableGraph>>;
CutResult cut_edge(const StableGraph& g, int e);
// Number of ways to distribute n labeled legs as n1 + (n - n1).
long long cut_relabelings(int n, int n1);

// Single vertex of genus g-k with k loops and n legs.
StableGraph single_vertex_loops(int g, int k, int n = 0);

}  // namespace mvq

#endif  // MVQ_STABLE_GRAPH_HPP_
