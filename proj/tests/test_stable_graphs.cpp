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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "mvq/stable_graph.hpp"

using namespace mvq;

namespace {

// Automorphisms acting on half-edges, by brute force over edge
// permutations and orientation flips. Legs are fixed.
long long brute_force_aut(const StableGraph& G) {
  const int E = G.num_edges(), V = G.num_vertices();
  if (E == 0) return 1;
  std::vector<int> perm(E);
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    for (int flips = 0; flips < (1 << E); ++flips) {
      std::vector<int> phi(V, -1);
      bool ok = true;
      auto assign = [&](int from, int to) {
        if (phi[from] == -1) phi[from] = to;
        else if (phi[from] != to) ok = false;
      };
      for (int e = 0; e < E && ok; ++e) {
        auto [a, b] = G.edges[e];
        auto [c, d] = G.edges[perm[e]];
        if ((flips >> e) & 1) std::swap(c, d);
        assign(a, c);
        assign(b, d);
      }
      for (int i = 0; i < G.num_legs() && ok; ++i) assign(G.legs[i], G.legs[i]);
      if (!ok) continue;
      std::set<int> image(phi.begin(), phi.end());
      if (image.size() != static_cast<size_t>(V) || image.count(-1)) continue;
      for (int v = 0; v < V; ++v) ok = ok && G.genus[v] == G.genus[phi[v]];
      if (ok) ++count;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

StableGraph shuffled(const StableGraph& G, std::mt19937& rng) {
  const int V = G.num_vertices();
  std::vector<int> p(V);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  StableGraph H;
  H.genus.resize(V);
  for (int v = 0; v < V; ++v) H.genus[p[v]] = G.genus[v];
  for (auto [a, b] : G.edges) H.edges.emplace_back(std::min(p[a], p[b]), std::max(p[a], p[b]));
  std::shuffle(H.edges.begin(), H.edges.end(), rng);
  for (int v : G.legs) H.legs.push_back(p[v]);
  return H;
}

}  // namespace

TEST_CASE("catalog sizes") {
  CHECK(enumerate(2, 0).entries.size() == 7);
  CHECK(enumerate(1, 2).entries.size() == 5);
  CHECK(enumerate(3, 0).entries.size() == 42);
  CHECK(enumerate(0, 4).entries.size() == 4);
  CHECK(enumerate(0, 5).entries.size() == 26);
  CHECK(enumerate(1, 1).entries.size() == 2);
  CHECK_THROWS_AS(enumerate(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate(0, 2), std::invalid_argument);
}

TEST_CASE("catalog entries are valid, distinct and ordered by edge count") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 0}, {1, 2}, {3, 0}, {0, 6}, {2, 1}, {1, 3}}) {
    const auto& cat = enumerate(g, n);
    std::set<std::string> keys;
    int last_edges = 0;
    for (const auto& e : cat.entries) {
      CHECK_NOTHROW(e.graph.validate(g, n));
      CHECK(keys.insert(e.key).second);
      CHECK(e.graph.num_edges() >= last_edges);
      last_edges = e.graph.num_edges();
      CHECK(e.graph.num_edges() <= 3 * g - 3 + n);
    }
    CHECK(cat.entries.front().graph.num_edges() == 0);
  }
}

TEST_CASE("automorphism orders agree with brute force") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 0}, {1, 2}, {3, 0}, {0, 6}, {2, 1}, {1, 3}}) {
    for (const auto& e : enumerate(g, n).entries) {
      if (e.graph.num_edges() > 6) continue;
      CAPTURE(e.graph.to_string());
      CHECK(e.aut_order == brute_force_aut(e.graph));
    }
  }
}

TEST_CASE("canonical key is invariant under relabeling") {
  std::mt19937 rng(12345);
  for (const auto& e : enumerate(3, 0).entries) {
    for (int t = 0; t < 5; ++t) {
      auto H = shuffled(e.graph, rng);
      auto c = canonicalize(H);
      CHECK(c.key == e.key);
      CHECK(c.aut_order == e.aut_order);
    }
  }
  for (const auto& e : enumerate(1, 3).entries) {
    auto c = canonicalize(shuffled(e.graph, rng));
    CHECK(c.key == e.key);
  }
}

TEST_CASE("validation rejects malformed graphs") {
  CHECK_THROWS(StableGraph{{0}, {}, {0, 0}}.validate());                // unstable vertex
  CHECK_THROWS(StableGraph{{1, 1}, {}, {}}.validate());                 // disconnected
  CHECK_THROWS(StableGraph{{0}, {{0, 1}}, {0, 0, 0}}.validate());       // bad endpoint
  CHECK_NOTHROW(StableGraph{{0}, {{0, 0}, {0, 0}}, {}}.validate(2, 0));
  CHECK_THROWS(StableGraph{{0}, {{0, 0}, {0, 0}}, {}}.validate(2, 1));
}

TEST_CASE("bridges and cuts") {
  StableGraph phi{{0, 1}, {{0, 0}, {0, 1}}, {}};
  CHECK_FALSE(is_bridge(phi, 0));
  CHECK(is_bridge(phi, 1));
  auto loop_cut = std::get<StableGraph>(cut_edge(phi, 0));
  CHECK(loop_cut.total_genus() == 1);
  CHECK(loop_cut.num_legs() == 2);
  CHECK_NOTHROW(loop_cut.validate(1, 2));
  auto parts = std::get<std::pair<StableGraph, StableGraph>>(cut_edge(phi, 1));
  CHECK(parts.first.total_genus() + parts.second.total_genus() == 2);
  CHECK(parts.first.num_legs() == 1);
  CHECK(parts.second.num_legs() == 1);
  CHECK(cut_relabelings(6, 3) == 20);
}

TEST_CASE("single-vertex loop graphs") {
  auto G = single_vertex_loops(3, 2);
  CHECK(G.num_vertices() == 1);
  CHECK(G.genus[0] == 1);
  CHECK(G.loops_at(0) == 2);
  CHECK(aut_order(G) == 8);
  CHECK_THROWS(single_vertex_loops(2, 3));
}

TEST_CASE("half-edge view") {
  StableGraph G{{0, 0}, {{0, 1}, {1, 1}}, {0, 0}};
  auto h = G.half_edges();
  CHECK(h.attach.size() == 6);
  CHECK(h.pairing[0] == 1);
  CHECK(h.pairing[4] == 4);
  CHECK(h.leg_label[5] == 2);
}
