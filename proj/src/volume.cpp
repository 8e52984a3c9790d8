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

#include "mvq/volume.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <thread>

#include "mvq/correlators.hpp"

namespace mvq {

namespace {

void compositions(int total, int parts, std::vector<int>* cur,
                  const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur->size()) == parts - 1) {
    cur->push_back(total);
    f(*cur);
    cur->pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur->push_back(x);
    compositions(total - x, parts, cur, f);
    cur->pop_back();
  }
}

}  // namespace

const EdgePolynomial& kontsevich_poly(int g, int n) {
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0)
    throw std::invalid_argument("unstable (g, n) for the counting polynomial");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<EdgePolynomial>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({g, n});
    if (it != memo.end()) return *it->second;
  }
  auto P = std::make_unique<EdgePolynomial>(n);
  const int dim = 3 * g - 3 + n;
  const Rational scale = rpow(Rational(2), -(5L * g - 6 + 2 * n));
  std::vector<int> cur;
  compositions(dim, n, &cur, [&](const std::vector<int>& d) {
    Integer den = 1;
    Exponents m(n);
    for (int i = 0; i < n; ++i) {
      den *= factorial(d[i]);
      m[i] = 2 * d[i];
    }
    P->add_term(m, correlator(g, d) * scale / Rational(den));
  });
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = memo[{g, n}];
  if (!slot) slot = std::move(P);
  return *slot;
}

Rational graph_prefactor(int g, int n) {
  if (6 * g - 7 + 2 * n < 0)
    throw std::invalid_argument("no edges possible for this (g, n)");
  return Rational(factorial(4L * g - 4 + n)) * rpow(Rational(2), 6L * g - 5 + 2 * n) /
         Rational(factorial(6L * g - 7 + 2 * n));
}

EdgePolynomial raw_graph_polynomial(const StableGraph& G) {
  const int E = G.num_edges();
  if (E == 0) throw std::invalid_argument("graph without edges has no polynomial");
  EdgePolynomial P = EdgePolynomial::monomial(Exponents(E, 1));
  for (int v = 0; v < G.num_vertices(); ++v) {
    std::vector<int> target;
    for (int e = 0; e < E; ++e) {
      if (G.edges[e].first == v) target.push_back(e);
      if (G.edges[e].second == v) target.push_back(e);
    }
    for (int x : G.legs)
      if (x == v) target.push_back(-1);
    const EdgePolynomial& N = kontsevich_poly(G.genus[v], static_cast<int>(target.size()));
    P = P * N.substitute(target, E);
  }
  return P;
}

EdgePolynomial graph_polynomial(const StableGraph& G, long long aut) {
  const int g = G.total_genus(), n = G.num_legs();
  EdgePolynomial P = raw_graph_polynomial(G);
  Rational c = graph_prefactor(g, n) / Rational(static_cast<long>(aut)) *
               rpow(Rational(2), -(G.num_vertices() - 1L));
  P *= c;
  return P;
}

EdgePolynomial graph_polynomial(const StableGraph& G) {
  return graph_polynomial(G, aut_order(G));
}

PiRational op_Z(const EdgePolynomial& P) {
  PiRational total;
  for (const auto& [m, c] : P.terms()) {
    PiRational t(c, 0);
    for (int e : m) {
      if (e % 2 == 0)
        throw std::logic_error("Z operator met an even exponent: " + P.to_string());
      t *= PiRational(Rational(factorial(e)), 0) * zeta_even(e + 1);
    }
    total += t;
  }
  return total;
}

Rational op_Y(const std::vector<long>& H, const EdgePolynomial& P) {
  if (static_cast<int>(H.size()) != P.nvars())
    throw std::invalid_argument("height vector length must match variable count");
  for (long h : H)
    if (h <= 0) throw std::invalid_argument("heights must be positive");
  Rational total = 0;
  for (const auto& [m, c] : P.terms()) {
    Rational t = c;
    for (size_t i = 0; i < m.size(); ++i)
      t *= Rational(factorial(m[i])) / rpow(Rational(H[i]), m[i] + 1);
    total += t;
  }
  return total;
}

PiRational vol_graph(const StableGraph& G) {
  if (G.num_edges() == 0) return {};
  return op_Z(graph_polynomial(G));
}

Rational vol_multicurve(const StableGraph& G, const std::vector<long>& H) {
  return op_Y(H, graph_polynomial(G));
}

const VolumeReport& masur_veech_volume(int g, int n, int threads) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<VolumeReport>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({g, n});
    if (it != memo.end()) return *it->second;
  }
  const GraphCatalog& cat = enumerate(g, n);
  auto rep = std::make_unique<VolumeReport>();
  rep->g = g;
  rep->n = n;
  std::vector<const CatalogEntry*> work;
  for (const auto& e : cat.entries)
    if (e.graph.num_edges() > 0) work.push_back(&e);
  rep->per_graph.resize(work.size());

  auto run = [&](size_t i) {
    const CatalogEntry& e = *work[i];
    GraphVolume gv;
    gv.key = e.key;
    gv.graph = e.graph;
    gv.aut_order = e.aut_order;
    gv.volume = op_Z(graph_polynomial(e.graph, e.aut_order));
    rep->per_graph[i] = std::move(gv);
  };
  unsigned width = threads > 0 ? static_cast<unsigned>(threads)
                               : std::max(1u, std::thread::hardware_concurrency());
  if (width <= 1 || work.size() < 2) {
    for (size_t i = 0; i < work.size(); ++i) run(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < width; ++t)
      pool.emplace_back([&, t] {
        for (size_t i = t; i < work.size(); i += width) run(i);
      });
    for (auto& th : pool) th.join();
  }

  for (const auto& gv : rep->per_graph) {
    rep->total += gv.volume;
    rep->per_cylinder_count[gv.graph.num_edges()] += gv.volume;
  }
  if (!rep->total.is_zero() && rep->total.pi_power != stratum_dimension(g, n))
    throw std::logic_error("volume has unexpected power of pi");

  std::lock_guard<std::mutex> lock(mu);
  auto& slot = memo[{g, n}];
  if (!slot) slot = std::move(rep);
  return *slot;
}

PiRational genus0_volume(int n) {
  if (n < 4) throw std::invalid_argument("genus 0 volume needs n >= 4");
  return {rpow(Rational(2), 5 - n), 2 * n - 6};
}

}  // namespace mvq
