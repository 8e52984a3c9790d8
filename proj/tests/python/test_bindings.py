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
"""Smoke tests for the extension module."""

import json
import math
import os
from fractions import Fraction
from itertools import product
from pathlib import Path

import pytest

import mvq

DATA = Path(os.environ.get("MVQ_TEST_DATA", Path(__file__).resolve().parents[1] / "data"))


def load(name):
  return json.loads((DATA / name).read_text())


def test_genus_two_volume():
  r = mvq.volume(2, 0)
  assert r["total"] == mvq.PiValue(Fraction(1, 15), 6)
  assert math.isclose(float(r["total"]), 64.0926, rel_tol=1e-5)
  assert len(r["per_graph"]) == 6
  assert sum(row["volume"].coeff for row in r["per_graph"]) == Fraction(1, 15)


def test_per_cylinder_sums_match_total():
  r = mvq.volume(1, 3)
  assert sum(v.coeff for v in r["per_cylinder_count"].values()) == r["total"].coeff


def test_graph_volume_of_file_matches_catalog_entry():
  G = load("phi.json")
  v = mvq.graph_volume(G)
  keys = {json.dumps(row["graph"], sort_keys=True): row["volume"] for row in mvq.volume(2, 0)["per_graph"]}
  assert v in keys.values()


def test_siegel_veech_two_methods():
  r = mvq.siegel_veech(2, 0, graph=True, boundary=True)
  assert r["c_area_times_pi2_over_3"] == Fraction(19, 18)
  assert r["boundary"] == Fraction(19, 18)
  assert r["lambda_plus"] == Fraction(4, 3)


def test_out_of_range_raises_dedicated_error():
  with pytest.raises(mvq.OutOfHypothesisError):
    mvq.siegel_veech(1, 1, graph=False, boundary=True)
  assert issubclass(mvq.OutOfHypothesisError, ValueError)


def test_unstable_type_is_value_error():
  with pytest.raises(ValueError):
    mvq.volume(0, 2)


def test_cylinder_distribution_sums_to_one():
  d = mvq.cylinder_distribution(2, 0)
  assert d == {1: Fraction(7, 27), 2: Fraction(5, 9), 3: Fraction(5, 27)}


def test_correlators_small():
  assert mvq.correlator(1, [1]) == Fraction(1, 24)
  assert mvq.correlator(0, [0, 0, 0]) == 1
  # genus zero: multinomial
  assert mvq.correlator(0, [1, 1, 0, 0, 0]) == 2


def test_frequency_and_weights():
  assert mvq.frequency(load("sphere6_split33.json")) == Fraction(1, 24)
  assert mvq.b_gn(0, 6) == mvq.PiValue(Fraction(1, 384), 6)


def test_agk_shape():
  a = mvq.agk(3)
  assert len(a) == 3 * 3
  assert a[0] == 1
  assert a == a[::-1]
  assert all(0 < x <= 1 for x in a)


def test_sep_ratio_genus_two():
  assert mvq.sep_nonsep_ratio(2) == Fraction(1, 48)


def test_harmonic_sums_against_brute_force():
  def brute(k, m):
    return sum(Fraction(1, math.prod(c)) for c in product(range(1, m + 1), repeat=k) if sum(c) == m)

  for k, m in [(1, 5), (2, 6), (3, 7)]:
    assert mvq.harmonic_H(k, m) == brute(k, m)
    assert math.isclose(mvq.harmonic_H_float(k, m), float(brute(k, m)), rel_tol=1e-12)


def test_lattice_sum_against_enumeration():
  # b_1 H_1 + b_2 H_2 <= N over positive integers
  N = 30
  terms = [(a, b) for a in range(1, N) for b in range(1, N)
           for h1 in range(1, N // a + 1) for h2 in range(1, N // b + 1) if a * h1 + b * h2 <= N]
  assert mvq.lattice_sum([1, 1], N) == sum(a * b for a, b in terms)
  even = sum(a * b for a, b in terms if (a + b) % 2 == 0)
  assert mvq.lattice_sum([1, 1], N, [[0, 1]]) == even


def test_square_tiled_count_converges():
  r = mvq.convergence_report(0, 4, 400)
  assert abs(r["total_count"] / r["total_exact"] - 1) < 0.02


def test_expectation_fixed_heights_exact():
  G = load("phi.json")
  e = mvq.expectation(G, [1, 0], [0, 1], heights=[1, 1])
  assert isinstance(e, Fraction) and e > 0
