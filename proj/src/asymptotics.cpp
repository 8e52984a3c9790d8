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

#include "mvq/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <numbers>

#include "mvq/correlators.hpp"
#include "mvq/stable_graph.hpp"
#include "mvq/volume.hpp"

namespace mvq {

namespace {

Rational df(long n) { return Rational(double_factorial(n)); }
Rational fa(long n) { return Rational(factorial(n)); }

const double kEuler = boost::math::constants::euler<double>();

}  // namespace

AgkSequence agk_by_recursion(int g) {
  if (g < 1) throw std::invalid_argument("a_{g,k} needs g >= 1");
  const int top = 3 * g - 1;
  AgkSequence s;
  s.g = g;
  s.values.assign(top + 1, Rational(0));
  s.values[0] = 1;
  const int last = (3 * g - 1) / 2;  // highest index reached by the recursion
  const Rational base = Rational(1) / df(6L * g - 1);
  for (int k = 0; k < last; ++k) {
    Rational step = df(6L * g - 3 - 2 * k) * base;
    int r = k % 3, j;
    if (r == 2) {  // k = 3j - 1
      j = (k + 1) / 3;
      step *= df(6L * j - 1) / fa(j) * fa(g - 1) / fa(g - j) * Rational(g - 2 * j);
    } else if (r == 0) {  // k = 3j
      j = k / 3;
      step *= Rational(-2) * df(6L * j + 1) / fa(j) * fa(g - 1) / fa(g - 1 - j);
    } else {  // k = 3j + 1
      j = (k - 1) / 3;
      step *= Rational(2) * df(6L * j + 3) / fa(j) * fa(g - 1) / fa(g - 1 - j);
    }
    s.values[k + 1] = s.values[k] + step;
  }
  for (int k = last + 1; k <= top; ++k) s.values[k] = s.values[top - k];
  return s;
}

AgkSequence agk_from_correlators(int g) {
  if (g < 1) throw std::invalid_argument("a_{g,k} needs g >= 1");
  AgkSequence s;
  s.g = g;
  const int top = 3 * g - 1;
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 24, static_cast<unsigned long>(g));
  const Rational norm = Rational(p * factorial(g)) / df(6L * g - 1);
  for (int k = 0; k <= top; ++k)
    s.values.push_back(df(2L * k + 1) * df(6L * g - 1 - 2 * k) * norm *
                       correlator(g, {k, top - k}));
  return s;
}

Rational two_point_from_agk(const AgkSequence& a, int k) {
  const int g = a.g;
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 24, static_cast<unsigned long>(g));
  return a.values.at(k) * df(6L * g - 1) /
         (df(2L * k + 1) * df(6L * g - 1 - 2 * k) * Rational(p * factorial(g)));
}

RPQ rpq(int g, int j) {
  RPQ r;
  r.R = Rational(binomial(3L * g, 3L * j) * binomial(g, j)) /
        Rational(binomial(6L * g, 6L * j));
  const long a = 6L * g - 6 * j;
  r.Q = Rational(g) * (a - 1) * (a - 3);
  r.P1 = Rational(a - 1) * (a - 3) * (g - 2L * j);
  r.P2 = Rational(-2) * (a - 3) * (6L * j + 1) * (g - j);
  r.P3 = Rational(2) * (6L * j + 1) * (6L * j + 3) * (g - j);
  return r;
}

namespace {

// (4h)! 2^{h+2} sum_k <tau_k tau_{3h-1-k}>_h / (k! (3h-1-k)!) for genus h.
Rational gamma1_over_zeta(int h) {
  AgkSequence a = agk_by_recursion(h);
  Rational s = 0;
  for (int k = 0; k <= 3 * h - 1; ++k)
    s += two_point_from_agk(a, k) / (fa(k) * fa(3L * h - 1 - k));
  return s * fa(4L * h) * rpow(Rational(2), h + 2);
}

}  // namespace

PiRational vol_gamma1(int g) {
  if (g < 2) throw std::invalid_argument("one-loop graph needs g >= 2");
  return zeta_even(6 * (g - 1)) * gamma1_over_zeta(g - 1);
}

double vol_gamma1_asymptotic(int g) {
  return std::sqrt(2.0 / (3.0 * std::numbers::pi * g)) * std::pow(8.0 / 3.0, 4.0 * g - 4);
}

PiRational vol_delta(int g1, int g2) {
  if (g1 < 1 || g2 < 1) throw std::invalid_argument("both sides need genus >= 1");
  const int g = g1 + g2;
  Rational c = Rational(4) / (g1 == g2 ? 2 : 1);
  c *= Rational(binomial(4L * g - 4, g)) * rpow(Rational(12), -g);
  c *= Rational(binomial(g, g1) * binomial(3L * g - 4, 3L * g1 - 2));
  return zeta_even(6 * g - 6) * c;
}

PiRational vol_gamma_k(int g, int k) {
  if (k < 1) throw std::invalid_argument("need at least one loop");
  return vol_graph(single_vertex_loops(g, k));
}

Gamma1Sandwich gamma1_sandwich(int g) {
  if (g < 1) throw std::invalid_argument("need g >= 1");
  Gamma1Sandwich s;
  s.value = gamma1_over_zeta(g);
  s.upper = Rational(binomial(4L * g, g)) * rpow(Rational(16, 3), g);
  s.lower = s.upper * (Rational(1) - Rational(2, 6 * g - 1));
  return s;
}

Rational sep_nonsep_ratio(int g) {
  if (g < 2) throw std::invalid_argument("need g >= 2");
  PiRational sep;
  for (int g1 = 1; 2 * g1 <= g; ++g1) sep += vol_delta(g1, g - g1);
  PiQuotient q = divide(sep, vol_gamma1(g));
  return q.coeff;
}

double sep_nonsep_asymptotic(int g) {
  return std::sqrt(2.0 / (3.0 * std::numbers::pi * g)) / std::pow(4.0, g);
}

Integer binomial_product_sum(int g) {
  Integer s = 0;
  for (int g1 = 1; g1 <= g - 1; ++g1)
    s += binomial(g, g1) * binomial(3L * g - 4, 3L * g1 - 2);
  return s;
}

double binomial_product_sum_normalized(int g) {
  Integer s = binomial_product_sum(g);
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, s.get_mpz_t());
  return std::ldexp(mant, static_cast<int>(exp2 - (4L * g - 4))) *
         std::sqrt(6.0 * std::numbers::pi * g);
}

namespace {

// f_k[m] = sum over compositions of m into k parts of prod w[j_i]
template <class T>
std::vector<T> composition_power(const std::vector<T>& w, int k, int m) {
  std::vector<T> f = w;
  for (int step = 2; step <= k; ++step) {
    std::vector<T> next(m + 1, T(0));
    for (int s = step; s <= m; ++s) {
      T acc(0);
      for (int i = step - 1; i <= s - 1; ++i) acc += f[i] * w[s - i];
      next[s] = acc;
    }
    f = std::move(next);
  }
  return f;
}

void check_km(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("need k >= 1 and m >= 1");
}

}  // namespace

Rational harmonic_H(int k, int m) {
  check_km(k, m);
  if (m < k) return 0;
  std::vector<Rational> w(m + 1, Rational(0));
  for (int j = 1; j <= m; ++j) w[j] = Rational(1, j);
  return composition_power(w, k, m)[m];
}

PiRational harmonic_Z(int k, int m) {
  check_km(k, m);
  if (m < k) return {};
  std::vector<Rational> w(m + 1, Rational(0));
  for (int j = 1; j <= m; ++j) w[j] = zeta_even(2 * j).coeff / j;
  return {composition_power(w, k, m)[m], 2 * m};
}

namespace {

long double float_power_at(const std::vector<long double>& w, int k, int m) {
  if (m < k) return 0;
  if (k == 1) return w[m];
  std::vector<long double> f = composition_power(w, k - 1, m);
  long double acc = 0;
  for (int i = k - 1; i <= m - 1; ++i) acc += f[i] * w[m - i];
  return acc;
}

}  // namespace

double harmonic_H_float(int k, int m) {
  check_km(k, m);
  std::vector<long double> w(m + 1, 0);
  for (int j = 1; j <= m; ++j) w[j] = 1.0L / j;
  return static_cast<double>(float_power_at(w, k, m));
}

double harmonic_Z_float(int k, int m) {
  check_km(k, m);
  std::vector<long double> w(m + 1, 0);
  for (int j = 1; j <= m; ++j)
    w[j] = static_cast<long double>(boost::math::zeta(2.0 * j)) / j;
  return static_cast<double>(float_power_at(w, k, m));
}

SeriesCoefficients series_coeffs(int max_j) {
  if (max_j < 0) throw std::invalid_argument("max_j must be >= 0");
  const int order = max_j + 10;
  // log Gamma(1+z) = -gamma z + sum_{n>=2} (-1)^n zeta(n) z^n / n
  std::vector<double> L(order + 1, 0.0);
  if (order >= 1) L[1] = -kEuler;
  for (int n = 2; n <= order; ++n)
    L[n] = (n % 2 == 0 ? 1.0 : -1.0) * boost::math::zeta(static_cast<double>(n)) / n;
  std::vector<double> c(order + 1, 0.0);
  c[0] = 1;
  for (int k = 1; k <= order; ++k) {
    double s = 0;
    for (int n = 1; n <= k; ++n) s += n * L[n] * c[k - n];
    c[k] = s / k;
  }
  SeriesCoefficients out;
  out.c.assign(c.begin(), c.begin() + max_j + 1);
  const double log2 = std::numbers::ln2;
  double pw = 1;  // (log 2)^j / j!
  for (int j = 0; j <= max_j; ++j) {
    if (j > 0) pw *= log2 / j;
    double sa = 0, sb = 0;
    for (int i = 0; i < j; ++i) {
      sa += out.A[i] * c[j - i];
      sb += out.B[i] * c[j - i];
    }
    out.A.push_back((j == 0 ? 1.0 : 0.0) - sa);
    out.B.push_back(pw - sb);
  }
  return out;
}

SeriesCheck series_checks(int terms) {
  SeriesCoefficients s = series_coeffs(terms);
  SeriesCheck r{};
  const double pi = std::numbers::pi, log2 = std::numbers::ln2;
  double half = 1;
  for (int j = 0; j <= terms; ++j) {
    r.sum_A_half += s.A[j] * half;
    r.sum_B_half += s.B[j] * half;
    if (j >= 1) {
      r.sum_jA_half += j * s.A[j] * half * 2;
      r.sum_jB_half += j * s.B[j] * half * 2;
    }
    half /= 2;
  }
  r.target_A_half = 2 / std::sqrt(pi);
  r.target_B_half = 2 * std::sqrt(2 / pi);
  r.target_jA_half = 2 * (2 * log2 + kEuler - 2) / std::sqrt(pi);
  r.target_jB_half = 2 * std::sqrt(2.0) * (3 * log2 + kEuler - 2) / std::sqrt(pi);
  double pw = 1;
  for (int j = 0; j <= terms; ++j) {
    if (j > 0) pw *= log2 / j;
    double ra = 0, rb = 0;
    for (int i = 0; i <= j; ++i) {
      ra += s.A[i] * s.c[j - i];
      rb += s.B[i] * s.c[j - i];
    }
    ra -= (j == 0 ? 1.0 : 0.0);
    rb -= pw;
    r.max_recurrence_error = std::max({r.max_recurrence_error, std::abs(ra), std::abs(rb)});
  }
  return r;
}

ExpansionResidual expansion_residual(int k, int m) {
  check_km(k, m);
  SeriesCoefficients s = series_coeffs(k);
  const double lm = std::log(static_cast<double>(m));
  double kf = std::tgamma(k + 1.0);
  double eh = m * harmonic_H_float(k, m) / kf;
  double ez = m * harmonic_Z_float(k, m) / kf;
  for (int j = 0; j <= k - 1; ++j) {
    double t = std::pow(lm, k - 1 - j) / std::tgamma(k - j + 0.0);
    eh -= s.A[j] * t;
    ez -= s.B[j] * t;
  }
  return {eh, ez};
}

double poisson_lambda(int g) {
  if (g < 2) throw std::invalid_argument("need g >= 2");
  return (std::log(6.0 * g - 6) + kEuler) / 2 + (std::numbers::ln2 - 1);
}

PoissonModel poisson_model(int g, const std::map<int, Rational>& exact) {
  PoissonModel m;
  m.lambda = poisson_lambda(g);
  double p = std::exp(-m.lambda);  // p(0)
  for (int k = 1;; ++k) {
    m.pmf[k] = p;
    p *= m.lambda / k;
    if (k >= 3 * g - 3 && p < 1e-18) break;
  }
  if (!exact.empty()) {
    double tv = 0;
    for (const auto& [k, q] : m.pmf) {
      auto it = exact.find(k);
      tv += std::abs(q - (it == exact.end() ? 0.0 : to_double(it->second)));
    }
    for (const auto& [k, q] : exact)
      if (!m.pmf.count(k)) tv += std::abs(to_double(q));
    m.tv_distance = tv / 2;
  }
  return m;
}

}  // namespace mvq
