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

#include "mvq/multicurve_stats.hpp"

#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "mvq/volume.hpp"

namespace mvq {

Integer const_gn(int g, int n) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(4 * g - 3 + n));
  return Integer(2 * (6 * g - 6 + 2 * n)) * factorial(4L * g - 4 + n) * p;
}

Rational frequency(const Multicurve& m) {
  m.graph.validate();
  if (static_cast<int>(m.weights.size()) != m.graph.num_edges())
    throw std::invalid_argument("need one weight per edge");
  const int g = m.graph.total_genus(), n = m.graph.num_legs();
  return vol_multicurve(m.graph, m.weights) / Rational(const_gn(g, n));
}

PiRational b_gn(int g, int n) {
  return masur_veech_volume(g, n).total * (Rational(1) / Rational(const_gn(g, n)));
}

std::map<int, Rational> cylinder_distribution(int g, int n) {
  const VolumeReport& rep = masur_veech_volume(g, n);
  std::map<int, Rational> out;
  for (const auto& [k, v] : rep.per_cylinder_count) out[k] = divide(v, rep.total).coeff;
  return out;
}

PiQuotient prob_unit_heights_one_cyl(int g, int n) {
  int d = 6 * g - 6 + 2 * n;
  if (d < 2) throw std::invalid_argument("stratum too small");
  return divide(PiRational(1, 0), zeta_even(d));
}

std::map<int, Rational> one_edge_split_frequencies(int n) {
  std::map<int, Rational> out;
  for (const auto& e : enumerate(0, n).entries) {
    if (e.graph.num_edges() != 1) continue;
    int left = 0;
    for (int x : e.graph.legs) left += (x == 0);
    int side = std::min(left, n - left);
    out[side] += frequency({e.graph, {1}});
  }
  return out;
}

void ZetaExpression::add(const Rational& c, int pi_power, std::vector<int> odd_zetas) {
  if (sgn(c) == 0) return;
  std::sort(odd_zetas.begin(), odd_zetas.end());
  auto key = std::make_pair(pi_power, std::move(odd_zetas));
  Rational& slot = terms[key];
  slot += c;
  if (sgn(slot) == 0) terms.erase(key);
}

double ZetaExpression::to_double() const {
  double s = 0;
  for (const auto& [k, c] : terms) {
    double t = mvq::to_double(c) * std::pow(std::numbers::pi, k.first);
    for (int z : k.second) t *= boost::math::zeta(static_cast<double>(z));
    s += t;
  }
  return s;
}

std::string ZetaExpression::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms) {
    if (!out.empty()) out += " + ";
    out += mvq::to_string(c);
    if (k.first != 0) out += " · π^" + std::to_string(k.first);
    for (size_t i = 0; i < k.second.size();) {
      size_t j = i;
      while (j < k.second.size() && k.second[j] == k.second[i]) ++j;
      out += " · ζ(" + std::to_string(k.second[i]) + ")";
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return out;
}

namespace {

std::vector<int> shift_of(const StableGraph& G, const std::vector<int>& num,
                          const std::vector<int>& den) {
  const size_t E = static_cast<size_t>(G.num_edges());
  if (num.size() != E || den.size() != E)
    throw std::invalid_argument("exponent vectors need one entry per edge");
  std::vector<int> s(E);
  for (size_t i = 0; i < E; ++i) s[i] = num[i] - den[i];
  return s;
}

}  // namespace

Expectation expectation_ratio(const StableGraph& G, const std::vector<int>& num,
                              const std::vector<int>& den,
                              const std::optional<std::vector<long>>& H) {
  G.validate();
  const std::vector<int> s = shift_of(G, num, den);
  const EdgePolynomial P = graph_polynomial(G);
  // smallest admissible shifted exponent: 0 with fixed heights (0! / H),
  // 1 without (exponent 0 would need zeta(1))
  const int floor_exp = H ? 0 : 1;

  int divergent_sign = 0;
  bool mixed = false;
  Rational exact_num = 0;
  ZetaExpression zeta_num;
  for (const auto& [m, c] : P.terms()) {
    Exponents mm(m.size());
    bool diverges = false;
    for (size_t i = 0; i < m.size(); ++i) {
      mm[i] = m[i] + s[i];
      if (mm[i] < floor_exp) diverges = true;
    }
    if (diverges) {
      int sg = sgn(c);
      if (divergent_sign != 0 && sg != divergent_sign) mixed = true;
      divergent_sign = sg;
      continue;
    }
    if (H) {
      exact_num += op_Y(*H, EdgePolynomial::monomial(mm, c));
    } else {
      Rational coeff = c;
      int pi_power = 0;
      std::vector<int> odd;
      for (int e : mm) {
        coeff *= Rational(factorial(e));
        if ((e + 1) % 2 == 0) {
          PiRational z = zeta_even(e + 1);
          coeff *= z.coeff;
          pi_power += z.pi_power;
        } else {
          odd.push_back(e + 1);
        }
      }
      zeta_num.add(coeff, pi_power, odd);
    }
  }
  if (mixed) throw std::domain_error("indeterminate: divergent terms of both signs");

  Expectation out;
  if (divergent_sign != 0) {
    out.infinite = divergent_sign > 0;
    out.value = divergent_sign > 0 ? std::numeric_limits<double>::infinity()
                                   : -std::numeric_limits<double>::infinity();
    out.symbolic = divergent_sign > 0 ? "+inf" : "-inf";
    return out;
  }
  if (H) {
    Rational r = exact_num / op_Y(*H, P);
    out.exact = r;
    out.value = to_double(r);
    out.symbolic = to_string(r);
  } else {
    PiRational z = op_Z(P);
    ZetaExpression q;
    for (const auto& [k, c] : zeta_num.terms)
      q.add(c / z.coeff, k.first - z.pi_power, k.second);
    out.value = q.to_double();
    out.symbolic = q.to_string();
    out.zeta = std::move(q);
  }
  return out;
}

namespace {

std::string poly_in_heights(const EdgePolynomial& P) {
  std::string out;
  for (auto it = P.terms().rbegin(); it != P.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "H" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string coeff = to_string(c);
    if (!out.empty()) out += " + ";
    if (mono.empty()) {
      out += coeff;
    } else if (c == 1) {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

// positive rational content: gcd of numerators over lcm of denominators
Rational content(const EdgePolynomial& P) {
  Integer gn = 0, ld = 1;
  for (const auto& [m, c] : P.terms()) {
    mpz_gcd(gn.get_mpz_t(), gn.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(ld.get_mpz_t(), ld.get_mpz_t(), c.get_den_mpz_t());
  }
  return make_rational(abs(gn), ld);
}

}  // namespace

std::string expectation_ratio_in_heights(const StableGraph& G, const std::vector<int>& num,
                                         const std::vector<int>& den) {
  G.validate();
  const std::vector<int> s = shift_of(G, num, den);
  const EdgePolynomial P = graph_polynomial(G);
  const int E = G.num_edges();
  // Y(H) b^m = m! u^{m+1} with u = 1/H
  EdgePolynomial N(E), D(E);
  for (const auto& [m, c] : P.terms()) {
    Exponents um(E), un(E);
    Rational cd = c, cn = c;
    bool ok = true;
    for (int i = 0; i < E; ++i) {
      um[i] = m[i] + 1;
      cd *= Rational(factorial(m[i]));
      int e = m[i] + s[i];
      if (e < 0) ok = false;
      else {
        un[i] = e + 1;
        cn *= Rational(factorial(e));
      }
    }
    D.add_term(um, cd);
    if (ok) N.add_term(un, cn);
    else return "+inf";
  }
  // multiply through by prod H^{M_i} to clear 1/H
  Exponents M(E, 0);
  for (const auto* poly : {&N, &D})
    for (const auto& [m, c] : poly->terms())
      for (int i = 0; i < E; ++i) M[i] = std::max(M[i], m[i]);
  auto flip = [&](const EdgePolynomial& Q) {
    EdgePolynomial R(E);
    for (const auto& [m, c] : Q.terms()) {
      Exponents h(E);
      for (int i = 0; i < E; ++i) h[i] = M[i] - m[i];
      R.add_term(h, c);
    }
    return R;
  };
  EdgePolynomial Nh = flip(N), Dh = flip(D);
  // drop common monomial factor
  Exponents low(E, 1 << 20);
  for (const auto* poly : {&Nh, &Dh})
    for (const auto& [m, c] : poly->terms())
      for (int i = 0; i < E; ++i) low[i] = std::min(low[i], m[i]);
  auto lower = [&](const EdgePolynomial& Q) {
    EdgePolynomial R(E);
    for (const auto& [m, c] : Q.terms()) {
      Exponents h(E);
      for (int i = 0; i < E; ++i) h[i] = m[i] - low[i];
      R.add_term(h, c);
    }
    return R;
  };
  Nh = lower(Nh);
  Dh = lower(Dh);
  Rational cn = content(Nh), cd = content(Dh);
  Nh *= Rational(1) / cn;
  Dh *= Rational(1) / cd;
  Rational lead = cn / cd;
  std::string num_s = poly_in_heights(Nh), den_s = poly_in_heights(Dh);
  std::string out = lead == 1 ? "" : to_string(lead) + " · ";
  bool num_single = Nh.size() == 1, den_single = Dh.size() == 1;
  out += num_single ? num_s : "(" + num_s + ")";
  if (den_s != "1") out += " / " + (den_single ? den_s : "(" + den_s + ")");
  return out;
}

HeightProbability prob_heights(const StableGraph& G, const std::vector<long>& bound) {
  G.validate();
  HeightProbability out;
  if (bound.empty()) {
    out.exact.coeff = 1;
    out.value = 1;
    return out;
  }
  const int E = G.num_edges();
  if (static_cast<int>(bound.size()) != E)
    throw std::invalid_argument("need one height bound per edge");
  double points = 1;
  for (long b : bound) {
    if (b < 1) throw std::invalid_argument("height bounds must be positive");
    points *= static_cast<double>(b);
  }
  if (points > 1e6) throw std::invalid_argument("too many height vectors");
  const EdgePolynomial P = graph_polynomial(G);
  Rational acc = 0;
  std::vector<long> H(E, 1);
  for (;;) {
    acc += op_Y(H, P);
    int i = 0;
    while (i < E && H[i] == bound[i]) H[i++] = 1;
    if (i == E) break;
    ++H[i];
  }
  out.exact = divide(PiRational(acc, 0), op_Z(P));
  out.value = out.exact.to_double();
  return out;
}

double ztilde_density(const StableGraph& G, const std::vector<long>& H,
                      const std::vector<double>& x) {
  const int E = G.num_edges();
  if (static_cast<int>(H.size()) != E || static_cast<int>(x.size()) != E)
    throw std::invalid_argument("need one height and one coordinate per edge");
  double sum = 0;
  for (double xi : x) {
    if (xi < 0) return 0;
    sum += xi;
  }
  if (sum > 1) return 0;
  const EdgePolynomial P = graph_polynomial(G);
  double v = 0;
  for (const auto& [m, c] : P.terms()) {
    double t = to_double(c);
    for (int i = 0; i < E; ++i)
      t *= std::pow(x[i], m[i]) / std::pow(static_cast<double>(H[i]), m[i] + 1);
    v += t;
  }
  return v;
}

Rational dirichlet_integral(const std::vector<int>& m) {
  Integer num = 1;
  long total = static_cast<long>(m.size());
  for (int e : m) {
    num *= factorial(e);
    total += e;
  }
  return make_rational(num, factorial(total));
}

Rational ztilde_integral(const StableGraph& G, const std::vector<long>& H) {
  const EdgePolynomial P = graph_polynomial(G);
  Rational acc = 0;
  for (const auto& [m, c] : P.terms()) {
    Rational t = c * dirichlet_integral(m);
    for (size_t i = 0; i < m.size(); ++i) t /= rpow(Rational(H[i]), m[i] + 1);
    acc += t;
  }
  return acc;
}

}  // namespace mvq
