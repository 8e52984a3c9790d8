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

#include "mvq/stable_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "mvq/exact.hpp"

namespace mvq {

int StableGraph::total_genus() const {
  int s = std::accumulate(genus.begin(), genus.end(), 0);
  return s + num_edges() - num_vertices() + 1;
}

int StableGraph::valence(int v) const {
  int n = 0;
  for (auto [a, b] : edges) n += (a == v) + (b == v);
  for (int x : legs) n += (x == v);
  return n;
}

int StableGraph::loops_at(int v) const {
  int n = 0;
  for (auto [a, b] : edges) n += (a == v && b == v);
  return n;
}

namespace {

int find_root(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

bool connected_without(const StableGraph& g, int skip) {
  int V = g.num_vertices();
  if (V == 0) return false;
  std::vector<int> p(V);
  std::iota(p.begin(), p.end(), 0);
  int comps = V;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (e == skip) continue;
    int a = find_root(p, g.edges[e].first), b = find_root(p, g.edges[e].second);
    if (a != b) {
      p[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

}  // namespace

bool StableGraph::connected() const { return connected_without(*this, -1); }

void StableGraph::validate() const {
  int V = num_vertices();
  if (V == 0) throw std::invalid_argument("graph has no vertices");
  for (int x : genus)
    if (x < 0) throw std::invalid_argument("negative vertex genus");
  for (auto [a, b] : edges)
    if (a < 0 || b < 0 || a >= V || b >= V || a > b)
      throw std::invalid_argument("edge endpoint out of range");
  for (int x : legs)
    if (x < 0 || x >= V) throw std::invalid_argument("leg attached to unknown vertex");
  if (!connected()) throw std::invalid_argument("graph is not connected");
  for (int v = 0; v < V; ++v)
    if (2 * genus[v] - 2 + valence(v) <= 0)
      throw std::invalid_argument("vertex " + std::to_string(v) + " is unstable");
}

void StableGraph::validate(int g, int n) const {
  validate();
  if (total_genus() != g)
    throw std::invalid_argument("graph has genus " + std::to_string(total_genus()) +
                                ", expected " + std::to_string(g));
  if (num_legs() != n)
    throw std::invalid_argument("graph has " + std::to_string(num_legs()) +
                                " legs, expected " + std::to_string(n));
}

HalfEdgeView StableGraph::half_edges() const {
  HalfEdgeView h;
  h.num_vertices = num_vertices();
  h.genus = genus;
  for (int e = 0; e < num_edges(); ++e) {
    h.attach.push_back(edges[e].first);
    h.attach.push_back(edges[e].second);
    h.pairing.push_back(2 * e + 1);
    h.pairing.push_back(2 * e);
    h.leg_label.push_back(0);
    h.leg_label.push_back(0);
  }
  for (int i = 0; i < num_legs(); ++i) {
    int idx = static_cast<int>(h.attach.size());
    h.attach.push_back(legs[i]);
    h.pairing.push_back(idx);
    h.leg_label.push_back(i + 1);
  }
  return h;
}

std::string StableGraph::to_string() const {
  std::string s = "V[";
  for (int v = 0; v < num_vertices(); ++v) s += (v ? "," : "") + std::to_string(genus[v]);
  s += "] E[";
  for (int e = 0; e < num_edges(); ++e)
    s += (e ? "," : "") + std::to_string(edges[e].first) + "-" +
         std::to_string(edges[e].second);
  s += "] L[";
  for (int i = 0; i < num_legs(); ++i) s += (i ? "," : "") + std::to_string(legs[i]);
  return s + "]";
}

CanonicalForm canonicalize(const StableGraph& G) {
  const int V = G.num_vertices();
  std::vector<std::vector<int>> mult(V, std::vector<int>(V, 0));
  for (auto [a, b] : G.edges) {
    if (a == b) {
      ++mult[a][a];
    } else {
      ++mult[a][b];
      ++mult[b][a];
    }
  }
  std::vector<std::vector<int>> legs_at(V);
  for (int i = 0; i < G.num_legs(); ++i) legs_at[G.legs[i]].push_back(i + 1);

  // colour refinement
  std::vector<std::vector<int>> sig(V);
  for (int v = 0; v < V; ++v) {
    sig[v] = {G.genus[v], mult[v][v], static_cast<int>(legs_at[v].size())};
    sig[v].insert(sig[v].end(), legs_at[v].begin(), legs_at[v].end());
  }
  std::vector<int> color(V, 0);
  int classes = 0;
  for (;;) {
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < V; ++v)
      color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) -
                                  uniq.begin());
    if (static_cast<int>(uniq.size()) == classes) break;
    classes = static_cast<int>(uniq.size());
    for (int v = 0; v < V; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < V; ++u)
        if (u != v && mult[v][u]) nb.emplace_back(color[u], mult[v][u]);
      std::sort(nb.begin(), nb.end());
      std::vector<int> s{color[v]};
      for (auto [c, m] : nb) {
        s.push_back(c);
        s.push_back(m);
      }
      sig[v] = std::move(s);
    }
  }

  std::vector<int> order(V);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return color[a] < color[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end)
  for (int i = 0; i < V;) {
    int j = i;
    while (j < V && color[order[j]] == color[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  auto encode = [&](const std::vector<int>& ord) {
    std::vector<int> code;
    code.reserve(V * 4 + V * V);
    for (int i = 0; i < V; ++i) {
      int v = ord[i];
      code.push_back(G.genus[v]);
      code.push_back(static_cast<int>(legs_at[v].size()));
      code.insert(code.end(), legs_at[v].begin(), legs_at[v].end());
    }
    for (int i = 0; i < V; ++i)
      for (int j = i; j < V; ++j) code.push_back(mult[ord[i]][ord[j]]);
    return code;
  };

  std::vector<int> best_order;
  std::vector<int> best_code;
  long long stabilizer = 0;
  std::vector<int> cur = order;
  std::function<void(size_t)> rec = [&](size_t c) {
    if (c == cells.size()) {
      std::vector<int> code = encode(cur);
      if (best_order.empty() || code < best_code) {
        best_code = std::move(code);
        best_order = cur;
        stabilizer = 1;
      } else if (code == best_code) {
        ++stabilizer;
      }
      return;
    }
    auto [b, e] = cells[c];
    std::sort(cur.begin() + b, cur.begin() + e);
    do {
      rec(c + 1);
    } while (std::next_permutation(cur.begin() + b, cur.begin() + e));
  };
  rec(0);

  CanonicalForm out;
  std::vector<int> new_index(V);
  for (int i = 0; i < V; ++i) new_index[best_order[i]] = i;
  out.graph.genus.resize(V);
  for (int v = 0; v < V; ++v) out.graph.genus[new_index[v]] = G.genus[v];
  for (auto [a, b] : G.edges) {
    int x = new_index[a], y = new_index[b];
    out.graph.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.graph.edges.begin(), out.graph.edges.end());
  for (int x : G.legs) out.graph.legs.push_back(new_index[x]);

  out.key.reserve(best_code.size() * 3);
  for (int x : best_code) {
    out.key += std::to_string(x);
    out.key += ',';
  }

  long long aut = stabilizer;
  for (int v = 0; v < V; ++v) {
    int l = mult[v][v];
    for (int i = 1; i <= l; ++i) aut *= 2 * i;
    for (int u = v + 1; u < V; ++u)
      for (int i = 2; i <= mult[v][u]; ++i) aut *= i;
  }
  out.aut_order = aut;
  return out;
}

long long aut_order(const StableGraph& g) { return canonicalize(g).aut_order; }

bool is_bridge(const StableGraph& g, int e) {
  if (e < 0 || e >= g.num_edges()) throw std::out_of_range("edge index");
  if (g.is_loop(e)) return false;
  return !connected_without(g, e);
}

namespace {

// Every way to pull vertex v apart into v and a new vertex joined by an edge.
void splits_of(const StableGraph& G, int v, std::vector<StableGraph>* out) {
  const int w = G.num_vertices();
  // incidence slots: legs, non-loop endpoints, loops (three choices each)
  std::vector<int> leg_ids, edge_ids, loop_ids;
  for (int i = 0; i < G.num_legs(); ++i)
    if (G.legs[i] == v) leg_ids.push_back(i);
  for (int e = 0; e < G.num_edges(); ++e) {
    auto [a, b] = G.edges[e];
    if (a == v && b == v) {
      loop_ids.push_back(e);
    } else if (a == v || b == v) {
      edge_ids.push_back(e);
    }
  }
  const size_t two_side = leg_ids.size() + edge_ids.size();
  std::vector<int> choice(two_side + loop_ids.size(), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == choice.size()) {
      StableGraph H = G;
      H.genus.push_back(0);
      size_t k = 0;
      for (int id : leg_ids)
        if (choice[k++]) H.legs[id] = w;
      for (int id : edge_ids) {
        if (choice[k++]) {
          auto& [a, b] = H.edges[id];
          if (a == v) a = w; else b = w;
          if (a > b) std::swap(a, b);
        }
      }
      for (int id : loop_ids) {
        int c = choice[k++];
        if (c == 1) H.edges[id] = {w, w};
        if (c == 2) H.edges[id] = {v, w};
      }
      H.edges.emplace_back(v, w);
      int nv = H.valence(v), nw = H.valence(w);
      for (int g1 = 0; g1 <= G.genus[v]; ++g1) {
        int g2 = G.genus[v] - g1;
        if (2 * g1 - 2 + nv <= 0 || 2 * g2 - 2 + nw <= 0) continue;
        H.genus[v] = g1;
        H.genus[w] = g2;
        out->push_back(H);
      }
      return;
    }
    int options = i < two_side ? 2 : 3;
    for (int c = 0; c < options; ++c) {
      choice[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

const GraphCatalog& enumerate(int g, int n) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
    throw std::invalid_argument("unstable (g, n) = (" + std::to_string(g) + ", " +
                                std::to_string(n) + ")");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<GraphCatalog>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = memo[{g, n}];
  if (slot) return *slot;

  auto cat = std::make_unique<GraphCatalog>();
  cat->g = g;
  cat->n = n;
  StableGraph root;
  root.genus = {g};
  root.legs.assign(n, 0);

  std::map<std::string, CatalogEntry> level;
  {
    CanonicalForm c = canonicalize(root);
    level.emplace(c.key, CatalogEntry{c.graph, c.aut_order, c.key});
  }
  while (!level.empty()) {
    std::map<std::string, CatalogEntry> next;
    std::vector<StableGraph> cand;
    for (auto& [key, entry] : level) {
      const StableGraph& G = entry.graph;
      cand.clear();
      for (int v = 0; v < G.num_vertices(); ++v) {
        if (G.genus[v] >= 1) {
          StableGraph H = G;
          H.genus[v] -= 1;
          H.edges.emplace_back(v, v);
          cand.push_back(std::move(H));
        }
        splits_of(G, v, &cand);
      }
      for (const StableGraph& H : cand) {
        CanonicalForm c = canonicalize(H);
        if (next.count(c.key)) continue;
        next.emplace(c.key, CatalogEntry{std::move(c.graph), c.aut_order, c.key});
      }
      cat->entries.push_back(std::move(entry));
    }
    level = std::move(next);
  }
  slot = std::move(cat);
  return *slot;
}

CutResult cut_edge(const StableGraph& G, int e) {
  if (e < 0 || e >= G.num_edges()) throw std::out_of_range("edge index");
  auto [a, b] = G.edges[e];
  StableGraph rest = G;
  rest.edges.erase(rest.edges.begin() + e);
  if (!is_bridge(G, e)) {
    rest.legs.push_back(a);
    rest.legs.push_back(b);
    return rest;
  }
  // split vertices into the two components
  const int V = G.num_vertices();
  std::vector<int> p(V);
  std::iota(p.begin(), p.end(), 0);
  for (auto [x, y] : rest.edges) {
    int rx = find_root(p, x), ry = find_root(p, y);
    if (rx != ry) p[rx] = ry;
  }
  auto component = [&](int anchor) {
    int root = find_root(p, anchor);
    std::vector<int> idx(V, -1);
    StableGraph H;
    for (int v = 0; v < V; ++v) {
      if (find_root(p, v) != root) continue;
      idx[v] = H.num_vertices();
      H.genus.push_back(G.genus[v]);
    }
    for (auto [x, y] : rest.edges)
      if (idx[x] >= 0) H.edges.emplace_back(idx[x], idx[y]);
    for (int x : G.legs)
      if (idx[x] >= 0) H.legs.push_back(idx[x]);
    H.legs.push_back(idx[anchor]);
    return H;
  };
  return std::make_pair(component(a), component(b));
}

long long cut_relabelings(int n, int n1) { return binomial(n, n1).get_si(); }

StableGraph single_vertex_loops(int g, int k, int n) {
  if (k < 0 || k > g) throw std::invalid_argument("need 0 <= k <= g");
  StableGraph G;
  G.genus = {g - k};
  G.edges.assign(k, {0, 0});
  G.legs.assign(n, 0);
  G.validate(g, n);
  return G;
}

}  // namespace mvq
