# Copyright 2026 The mvq Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Python access to the mvq engine.

Exact values come back as ``Fraction`` or as ``PiValue(coeff, pi_power)``
meaning ``coeff * pi**pi_power``. Graphs use the same dict layout as the
CLI's JSON files.
"""

import json
import math
from fractions import Fraction
from typing import NamedTuple

from . import _core
from ._core import OutOfHypothesisError

__all__ = [
    "OutOfHypothesisError", "PiValue", "correlator", "graphs", "volume", "graph_volume",
    "siegel_veech", "cylinder_distribution", "frequency", "b_gn", "expectation",
    "prob_heights", "agk", "sep_nonsep_ratio", "harmonic_H", "harmonic_H_float",
    "harmonic_Z_float", "series_coeffs", "poisson_lambda", "lattice_sum",
    "square_tiled_count", "convergence_report",
]


class PiValue(NamedTuple):
  coeff: Fraction
  pi_power: int

  def __float__(self):
    return float(self.coeff) * math.pi**self.pi_power


def _pi(d):
  return PiValue(Fraction(d["coeff"]), d["pi_power"])


def _dumps(obj):
  return json.dumps(obj)


def correlator(g, d):
  return Fraction(_core.correlator(g, list(d)))


def graphs(g, n):
  return json.loads(_core.graphs_json(g, n))["graphs"]


def volume(g, n, threads=0):
  """Total volume, per-graph contributions and per-cylinder-count sums."""
  r = json.loads(_core.volume_json(g, n, threads))
  r["total"] = _pi(r["total"])
  for row in r["per_graph"]:
    row["volume"] = _pi(row["volume"])
  r["per_cylinder_count"] = {int(k): _pi(v) for k, v in r["per_cylinder_count"].items()}
  return r


def graph_volume(graph):
  return _pi(json.loads(_core.graph_volume_json(_dumps(graph))))


def siegel_veech(g, n, graph=True, boundary=False):
  r = json.loads(_core.siegel_veech_json(g, n, graph, boundary))
  out = {
      "product": _pi(r["product"]),
      "c_area_times_pi2_over_3": Fraction(r["c_area_times_pi2_over_3"]),
      "lambda_plus": Fraction(r["lambda_plus"]),
  }
  if "boundary" in r:
    out["boundary"] = Fraction(r["boundary"])
  return out


def cylinder_distribution(g, n):
  d = json.loads(_core.cylinder_distribution_json(g, n))
  return {int(k): Fraction(v) for k, v in d.items()}


def frequency(multicurve):
  return Fraction(_core.frequency(_dumps(multicurve)))


def b_gn(g, n):
  return _pi(json.loads(_core.b_gn_json(g, n)))


def expectation(graph, num, den, heights=None):
  r = json.loads(_core.expectation_json(_dumps(graph), list(num), list(den), heights))
  if r["infinite"]:
    return math.inf
  if "exact" in r:
    return Fraction(r["exact"])
  return r["value"]


def prob_heights(graph, bound):
  r = json.loads(_core.prob_heights_json(_dumps(graph), list(bound)))
  return _pi(r["exact"]), r["value"]


def agk(g):
  return [Fraction(x) for x in _core.agk(g)]


def sep_nonsep_ratio(g):
  return Fraction(_core.sep_nonsep_ratio(g))


def harmonic_H(k, m):
  return Fraction(_core.harmonic_H(k, m))


harmonic_H_float = _core.harmonic_H_float
harmonic_Z_float = _core.harmonic_Z_float
poisson_lambda = _core.poisson_lambda


def series_coeffs(max_j):
  return json.loads(_core.series_coeffs_json(max_j))


def lattice_sum(m, N, parity=()):
  return int(_core.lattice_sum(list(m), N, [list(r) for r in parity]))


def square_tiled_count(graph, N):
  return Fraction(_core.square_tiled_count(_dumps(graph), N))


def convergence_report(g, n, N):
  return json.loads(_core.convergence_report_json(g, n, N))
