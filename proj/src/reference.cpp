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

#include "mvq/reference.hpp"

#include <algorithm>

#include "mvq/correlators.hpp"
#include "mvq/siegel_veech.hpp"
#include "mvq/stable_graph.hpp"
#include "mvq/volume.hpp"

namespace mvq {
namespace {

ReferenceRow row(int g, int n, const char* vol, int p, const char* c, const char* l) {
  return {g, n, PiRational(parse_rational(vol), p), parse_rational(c), parse_rational(l)};
}

CheckLine line(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, std::move(detail)};
}

}  // namespace

const std::vector<ReferenceRow>& reference_table() {
  static const std::vector<ReferenceRow> t = {
      row(0, 5, "1", 4, "5/9", "0"),
      row(0, 6, "1/2", 6, "11/18", "0"),
      row(0, 7, "1/4", 8, "2/3", "0"),
      row(1, 2, "1/3", 4, "7/9", "2/3"),
      row(1, 3, "11/60", 6, "47/66", "6/11"),
      row(1, 4, "1/10", 8, "44/63", "10/21"),
      row(1, 5, "163/3024", 10, "2075/2934", "70/163"),
      row(2, 0, "1/15", 6, "19/18", "4/3"),
      row(2, 1, "29/840", 8, "230/261", "32/29"),
      row(2, 2, "337/18144", 10, "8131/10110", "1636/1685"),
      row(3, 0, "115/33264", 12, "24199/25875", "4286/2875"),
      row(4, 0, "2106241/11548293120", 18, "283794163/315936150", "91179048/52656025"),
  };
  return t;
}

std::optional<ReferenceRow> reference_row(int g, int n) {
  for (const auto& r : reference_table())
    if (r.g == g && r.n == n) return r;
  return std::nullopt;
}

std::vector<CheckLine> check_stratum(int g, int n) {
  std::vector<CheckLine> out;
  const auto& vol = masur_veech_volume(g, n);
  auto sv = siegel_veech_report(g, n, true, false);
  if (auto ref = reference_row(g, n)) {
    out.push_back(line("volume", vol.total == ref->volume, vol.total.to_string()));
    out.push_back(line("siegel-veech", sv.c_area_times_pi2_over_3 == ref->c_area_times_pi2_over_3,
                       to_string(sv.c_area_times_pi2_over_3)));
    out.push_back(line("lyapunov", sv.lambda_plus == ref->lambda_plus, to_string(sv.lambda_plus)));
  }
  if (g == 0) {
    out.push_back(line("genus-0 closed form", vol.total == genus0_volume(n), vol.total.to_string()));
  }
  try {
    auto both = siegel_veech_report(g, n, true, true);
    out.push_back(line("boundary formula", both.methods_agree(), to_string(*both.boundary_value)));
  } catch (const OutOfHypothesis&) {
    // boundary formula not available here
  }
  int even = 0;
  for (const auto& e : enumerate(g, n).entries) {
    if (e.graph.num_edges() == 0) continue;
    if (!graph_polynomial(e.graph).all_exponents_odd()) ++even;
  }
  out.push_back(line("odd exponents", even == 0, std::to_string(even) + " graphs with even exponents"));

  int bad = 0, checked = 0;
  for (const auto& c : correlator_cache_snapshot()) {
    const auto& d = c.key.d;
    const int k = static_cast<int>(d.size());
    if (k < 2 || 2 * c.key.g - 3 + k <= 0) continue;
    if (d.front() == 0) {
      std::vector<int> rest(d.begin() + 1, d.end());
      Rational s = 0;
      for (size_t j = 0; j < rest.size(); ++j) {
        if (rest[j] == 0) continue;
        auto r = rest;
        --r[j];
        s += correlator(c.key.g, r);
      }
      ++checked;
      if (s != c.value) ++bad;
    }
    auto it = std::find(d.begin(), d.end(), 1);
    if (it != d.end()) {
      std::vector<int> rest(d.begin(), d.end());
      rest.erase(rest.begin() + (it - d.begin()));
      ++checked;
      if (Rational(2 * c.key.g - 3 + k) * correlator(c.key.g, rest) != c.value) ++bad;
    }
  }
  out.push_back(line("string and dilaton", bad == 0,
                     std::to_string(checked) + " relations, " + std::to_string(bad) + " failed"));
  return out;
}

}  // namespace mvq
