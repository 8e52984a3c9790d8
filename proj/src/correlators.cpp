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

#include "mvq/correlators.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

namespace mvq {

namespace {

// Key layout: {g, d_1, ..., d_n} with d sorted ascending.
using Packed = std::vector<int>;

struct PackedHash {
  size_t operator()(const Packed& v) const noexcept {
    size_t h = 0xcbf29ce484222325ull;
    for (int x : v) h = (h ^ static_cast<size_t>(x + 1)) * 0x100000001b3ull;
    return h;
  }
};

class Cache {
 public:
  bool find(const Packed& k, Rational* out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return false;
    *out = it->second;
    return true;
  }
  void insert(const Packed& k, const Rational& v) {
    std::unique_lock lock(mu_);
    map_.emplace(k, v);
  }
  std::vector<std::pair<Packed, Rational>> items() const {
    std::shared_lock lock(mu_);
    return {map_.begin(), map_.end()};
  }
  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<Packed, Rational, PackedHash> map_;
};

Cache& cache() {
  static Cache c;
  return c;
}

Rational dfact(long n) { return Rational(double_factorial(n)); }

Rational compute(int g, std::vector<int> d);

// Recursive entry: d need not be sorted; unstable or dimensionally wrong
// keys are simply zero.
Rational lookup(int g, std::vector<int> d) {
  int n = static_cast<int>(d.size());
  if (g < 0 || 2 * g - 2 + n <= 0) return 0;
  long sum = 0;
  for (int x : d) {
    if (x < 0) return 0;
    sum += x;
  }
  if (sum != 3L * g - 3 + n) return 0;
  std::sort(d.begin(), d.end());
  Packed key;
  key.reserve(n + 1);
  key.push_back(g);
  key.insert(key.end(), d.begin(), d.end());
  Rational v;
  if (cache().find(key, &v)) return v;
  v = compute(g, std::move(d));
  cache().insert(key, v);
  return v;
}

// d sorted ascending, stable and dimensionally consistent.
Rational compute(int g, std::vector<int> d) {
  int n = static_cast<int>(d.size());
  if (g == 0 && n == 3) return 1;
  if (g == 1 && n == 1) return Rational(1, 24);

  if (d.front() == 0) {
    // string equation
    std::vector<int> rest(d.begin() + 1, d.end());
    Rational s = 0;
    for (size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == 0) continue;
      if (j > 0 && rest[j] == rest[j - 1]) continue;
      long mult = std::count(rest.begin(), rest.end(), rest[j]);
      std::vector<int> e = rest;
      e[j] -= 1;
      s += Rational(mult) * lookup(g, e);
    }
    return s;
  }
  auto one = std::find(d.begin(), d.end(), 1);
  if (one != d.end()) {
    // dilaton equation
    std::vector<int> rest = d;
    rest.erase(rest.begin() + (one - d.begin()));
    return Rational(2 * g - 2 + n - 1) * lookup(g, rest);
  }

  // Virasoro recursion on the largest entry: d_max = k + 1.
  int k = d.back() - 1;
  std::vector<int> S(d.begin(), d.end() - 1);
  Rational total = 0;

  for (size_t j = 0; j < S.size(); ++j) {
    if (j > 0 && S[j] == S[j - 1]) continue;
    long mult = std::count(S.begin(), S.end(), S[j]);
    std::vector<int> e = S;
    e[j] += k;
    total += Rational(mult) * dfact(2 * k + 2 * S[j] + 1) /
             dfact(2 * S[j] - 1) * lookup(g, e);
  }

  // distinct values of S with multiplicities, for splitting
  std::vector<int> vals;
  std::vector<int> counts;
  for (int x : S) {
    if (!vals.empty() && vals.back() == x) {
      ++counts.back();
    } else {
      vals.push_back(x);
      counts.push_back(1);
    }
  }

  Rational half_sum = 0;
  for (int a = 0; a <= k - 1; ++a) {
    int b = k - 1 - a;
    Rational w = dfact(2 * a + 1) * dfact(2 * b + 1);
    Rational inner = 0;
    if (g >= 1) {
      std::vector<int> e = S;
      e.push_back(a);
      e.push_back(b);
      inner += lookup(g - 1, e);
    }
    // split S into I and its complement
    std::vector<int> take(vals.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == vals.size()) {
        std::vector<int> left{a}, right{b};
        Integer mult = 1;
        long sumI = a, nI = 1;
        for (size_t t = 0; t < vals.size(); ++t) {
          mult *= binomial(counts[t], take[t]);
          for (int r = 0; r < take[t]; ++r) left.push_back(vals[t]);
          for (int r = take[t]; r < counts[t]; ++r) right.push_back(vals[t]);
          sumI += static_cast<long>(vals[t]) * take[t];
          nI += take[t];
        }
        // genus of the left factor is forced by its dimension
        long three_g1 = sumI - nI + 3;
        if (three_g1 % 3 != 0) return;
        long g1 = three_g1 / 3;
        if (g1 < 0 || g1 > g) return;
        Rational l = lookup(static_cast<int>(g1), left);
        if (sgn(l) == 0) return;
        Rational r = lookup(g - static_cast<int>(g1), right);
        inner += Rational(mult) * l * r;
        return;
      }
      for (int t = 0; t <= counts[i]; ++t) {
        take[i] = t;
        rec(i + 1);
      }
    };
    rec(0);
    half_sum += w * inner;
  }
  total += half_sum / 2;
  return total / dfact(2 * k + 3);
}

void require_stable(int g, size_t n) {
  if (g < 0 || 2 * g - 2 + static_cast<int>(n) <= 0)
    throw std::invalid_argument("unstable (g, n) = (" + std::to_string(g) +
                                ", " + std::to_string(n) + ")");
}

}  // namespace

CorrelatorKey::CorrelatorKey(int genus, std::vector<int> exps)
    : g(genus), d(std::move(exps)) {
  std::sort(d.begin(), d.end());
}

Rational correlator(int g, const std::vector<int>& d) {
  require_stable(g, d.size());
  for (int x : d)
    if (x < 0) throw std::invalid_argument("negative psi exponent");
  return lookup(g, d);
}

Rational correlator(const CorrelatorKey& key) { return correlator(key.g, key.d); }

Rational one_point_closed_form(int g) {
  if (g < 1) throw std::invalid_argument("one-point closed form needs g >= 1");
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 24, static_cast<unsigned long>(g));
  return make_rational(1, p * factorial(g));
}

Rational normalized_bracket(int g, const std::vector<int>& d) {
  Rational v = correlator(g, d);
  Integer f = 1;
  long sum = 0;
  for (int x : d) {
    f *= factorial(2 * x + 1);
    f /= factorial(x);
    sum += x;
  }
  return v * Rational(f * (Integer(1) << static_cast<mp_bitcnt_t>(sum)));
}

Rational epsilon_d(int g, const std::vector<int>& d) {
  require_stable(g, d.size());
  long n = static_cast<long>(d.size());
  long sum = std::accumulate(d.begin(), d.end(), 0L);
  if (sum != 3L * g - 3 + n)
    throw std::invalid_argument("exponents must add up to 3g-3+n");
  std::vector<int> extremal(n, 0);
  extremal.back() = static_cast<int>(3L * g - 3 + n);
  return normalized_bracket(g, d) / normalized_bracket(g, extremal) - 1;
}

Rational c_gk(int g, int k, const std::vector<int>& D) {
  if (k < 1 || static_cast<int>(D.size()) != k)
    throw std::invalid_argument("D must have k >= 1 parts");
  require_stable(g, 2 * static_cast<size_t>(k));
  long sum = 0;
  for (int x : D) {
    if (x < 0) throw std::invalid_argument("negative part in D");
    sum += x;
  }
  if (sum != 3L * g - 3 + 2 * k)
    throw std::invalid_argument("D must be a composition of 3g-3+2k");

  Rational acc = 0;
  std::vector<int> split(k, 0);
  std::vector<int> exps(2 * k);
  std::function<void(int)> rec = [&](int j) {
    if (j == k) {
      Rational w = 1;
      for (int i = 0; i < k; ++i) {
        exps[2 * i] = split[i];
        exps[2 * i + 1] = D[i] - split[i];
        w *= Rational(factorial(2 * D[i] + 2)) /
             Rational(factorial(split[i]) * factorial(D[i] - split[i]));
      }
      acc += w * lookup(g, exps);
      return;
    }
    for (int a = 0; a <= D[j]; ++a) {
      split[j] = a;
      rec(j + 1);
    }
  };
  rec(0);
  Rational pre = Rational(factorial(g) * factorial(3L * g - 3 + 2 * k)) /
                 Rational(factorial(6L * g + 4 * k - 5));
  pre *= rpow(Rational(3), g) / rpow(Rational(2), 3L * g - 6 + 5 * k);
  return pre * acc;
}

std::vector<CachedCorrelator> correlator_cache_snapshot() {
  std::vector<CachedCorrelator> out;
  for (auto& [k, v] : cache().items()) {
    if (sgn(v) == 0) continue;
    CachedCorrelator c;
    c.key.g = k[0];
    c.key.d.assign(k.begin() + 1, k.end());
    c.value = v;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.key.g != b.key.g) return a.key.g < b.key.g;
    return a.key.d < b.key.d;
  });
  return out;
}

void clear_correlator_cache() { cache().clear(); }

}  // namespace mvq
