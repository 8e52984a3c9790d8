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

#include "mvq/lattice_oracle.hpp"

#include <boost/math/special_functions/zeta.hpp>
#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "mvq/volume.hpp"

namespace mvq {
namespace {

struct Overflow {};

// Arithmetic used by the summation kernel. The 128-bit version throws on
// overflow and the caller retries with GMP.
inline __int128 add(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline __int128 mul(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }

Integer to_integer(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  Integer hi = static_cast<unsigned long>(static_cast<uint64_t>(u >> 64));
  Integer lo = static_cast<unsigned long>(static_cast<uint64_t>(u));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}
inline Integer to_integer(const Integer& v) { return v; }

template <class T>
T power(long b, int m) {
  T r = 1;
  for (int i = 0; i < m; ++i) r = mul(r, T(b));
  return r;
}

// sigma[s] = sum of b^m over divisors b of s with b = parity mod 2.
template <class T>
std::vector<T> divisor_sums(int m, int parity, long X) {
  std::vector<T> s(X + 1, T(0));
  for (long b = parity ? 1 : 2; b <= X; b += 2) {
    T bm = power<T>(b, m);
    for (long q = b; q <= X; q += b) s[q] = add(s[q], bm);
  }
  return s;
}

// sum over s_1 + .. + s_k <= X of prod seqs[i][s_i]
template <class T>
T simplex_sum(const std::vector<const std::vector<T>*>& seqs, long X) {
  const int k = static_cast<int>(seqs.size());
  std::vector<T> last_prefix(X + 1, T(0));
  for (long s = 1; s <= X; ++s) last_prefix[s] = add(last_prefix[s - 1], (*seqs[k - 1])[s]);
  if (k == 1) return last_prefix[X];
  std::vector<T> F = *seqs[0];
  for (int i = 1; i + 1 < k; ++i) {
    std::vector<T> G(X + 1, T(0));
    const auto& S = *seqs[i];
    for (long a = 1; a <= X; ++a) {
      if (F[a] == 0) continue;
      for (long b = 1; a + b <= X; ++b) G[a + b] = add(G[a + b], mul(F[a], S[b]));
    }
    F.swap(G);
  }
  T total = 0;
  for (long t = 1; t < X; ++t) total = add(total, mul(F[t], last_prefix[X - t]));
  return total;
}

std::vector<std::vector<int>> parity_patterns(int k, const ParityConstraints& c) {
  if (k > 24) throw std::invalid_argument("too many lattice variables");
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    bool ok = true;
    for (const auto& row : c) {
      int par = 0;
      for (int i : row) par ^= static_cast<int>((mask >> i) & 1);
      if (par) { ok = false; break; }
    }
    if (!ok) continue;
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = static_cast<int>((mask >> i) & 1);
    out.push_back(std::move(p));
  }
  return out;
}

// Sum over the sublattice for a list of monomials with integer weights.
template <class T>
Integer weighted_sum(const std::vector<std::pair<Exponents, T>>& monos, int k, long X,
                     const ParityConstraints& c) {
  auto patterns = parity_patterns(k, c);
  std::map<std::pair<int, int>, std::vector<T>> cache;
  auto seq = [&](int m, int p) -> const std::vector<T>& {
    auto it = cache.find({m, p});
    if (it == cache.end()) it = cache.emplace(std::make_pair(m, p), divisor_sums<T>(m, p, X)).first;
    return it->second;
  };
  T total = 0;
  for (const auto& [m, w] : monos) {
    for (const auto& p : patterns) {
      std::vector<const std::vector<T>*> seqs;
      for (int i = 0; i < k; ++i) seqs.push_back(&seq(m[i], p[i]));
      total = add(total, mul(w, simplex_sum<T>(seqs, X)));
    }
  }
  return to_integer(total);
}

Integer weighted_sum_any(const std::vector<std::pair<Exponents, Integer>>& monos, int k, long X,
                         const ParityConstraints& c) {
  try {
    std::vector<std::pair<Exponents, __int128>> small;
    for (const auto& [m, w] : monos) {
      if (!w.fits_slong_p()) throw Overflow{};
      small.emplace_back(m, static_cast<__int128>(w.get_si()));
    }
    return weighted_sum<__int128>(small, k, X, c);
  } catch (const Overflow&) {
    return weighted_sum<Integer>(monos, k, X, c);
  }
}

void check_constraints(int k, const ParityConstraints& c) {
  for (const auto& row : c)
    for (int i : row)
      if (i < 0 || i >= k) throw std::invalid_argument("parity constraint index out of range");
}

}  // namespace

long long sublattice_index(int k, const ParityConstraints& c) {
  check_constraints(k, c);
  // rank over GF(2)
  std::vector<unsigned long> rows;
  for (const auto& row : c) {
    unsigned long r = 0;
    for (int i : row) r ^= 1ul << i;
    for (unsigned long b : rows)
      if ((r ^ b) < r) r ^= b;
    if (r) {
      rows.push_back(r);
      std::sort(rows.begin(), rows.end(), std::greater<>());
    }
  }
  return 1ll << rows.size();
}

Integer lattice_sum(const std::vector<int>& m, long N, const ParityConstraints& c) {
  const int k = static_cast<int>(m.size());
  if (k == 0) throw std::invalid_argument("empty exponent vector");
  if (N < 1) throw std::invalid_argument("N must be positive");
  for (int e : m)
    if (e < 0) throw std::invalid_argument("negative exponent");
  check_constraints(k, c);
  return weighted_sum_any({{m, Integer(1)}}, k, N, c);
}

LatticeCheck lattice_check(const std::vector<int>& m, long N, const ParityConstraints& c) {
  const int k = static_cast<int>(m.size());
  int deg = k;
  double limit = 1;
  for (int e : m) {
    if (e < 1) throw std::invalid_argument("exponents must be >= 1 for a finite limit");
    deg += e;
    limit *= std::tgamma(e + 1.0) * boost::math::zeta<double>(e + 1.0);
  }
  limit /= std::tgamma(deg + 1.0) * static_cast<double>(sublattice_index(k, c));
  LatticeCheck r;
  r.limit = limit;
  Integer s = lattice_sum(m, N, c);
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, s.get_mpz_t());
  r.normalized = std::ldexp(mant, static_cast<int>(exp)) / std::pow(static_cast<double>(N), deg);
  return r;
}

ParityConstraints graph_parity(const StableGraph& G) {
  ParityConstraints c(G.num_vertices());
  for (int e = 0; e < G.num_edges(); ++e) {
    if (G.is_loop(e)) continue;
    c[G.edges[e].first].push_back(e);
    c[G.edges[e].second].push_back(e);
  }
  ParityConstraints out;
  for (auto& row : c)
    if (!row.empty()) out.push_back(std::move(row));
  return out;
}

Rational square_tiled_count(const StableGraph& G, long N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  G.validate();
  if (G.num_edges() == 0) return Rational(0);
  const int g = G.total_genus(), n = G.num_legs();
  const int d = stratum_dimension(g, n);
  const int k = G.num_edges();
  EdgePolynomial Q = raw_graph_polynomial(G);
  // Clear denominators so the kernel runs on integers.
  Integer den = 1;
  for (const auto& [m, c] : Q.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::pair<Exponents, Integer>> monos;
  for (const auto& [m, c] : Q.terms()) {
    Rational w = c * den;
    monos.emplace_back(m, w.get_num());
  }
  Integer s = weighted_sum_any(monos, k, 2 * N, graph_parity(G));
  Rational count = make_rational(s * factorial(4 * g - 4 + n), den * Integer(static_cast<long>(aut_order(G))));
  Rational scale = make_rational(2 * d, 1) / rpow(Rational(N), d);
  return count * scale;
}

ConvergenceReport volume_convergence_report(int g, int n, long N) {
  ConvergenceReport rep;
  rep.g = g;
  rep.n = n;
  rep.N = N;
  const auto& vol = masur_veech_volume(g, n);
  for (const auto& gv : vol.per_graph) {
    ConvergenceRow row;
    row.key = gv.key;
    row.graph = gv.graph;
    row.exact = gv.volume.to_double();
    row.normalized_count = to_double(square_tiled_count(gv.graph, N));
    rep.total_count += row.normalized_count;
    rep.total_exact += row.exact;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace mvq
