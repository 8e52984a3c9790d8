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
"""Command-line behaviour: exit codes, machine formats, determinism."""

import csv
import io
import json
import os
import shutil
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("MVQ_CLI") or shutil.which("mvq")
DATA = Path(os.environ.get("MVQ_TEST_DATA", Path(__file__).resolve().parents[1] / "data"))

pytestmark = pytest.mark.skipif(CLI is None, reason="mvq executable not found")


def run(*args):
  return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)


def test_volume_text():
  r = run("volume", 2, 0)
  assert r.returncode == 0
  assert "1/15 · π^6" in r.stdout


def test_json_parses_and_reports_match():
  r = run("--json", "sv", 2, 0, "--method", "both")
  assert r.returncode == 0
  doc = json.loads(r.stdout)
  assert doc["c_area_times_pi2_over_3"] == "19/18"
  assert doc["boundary"] == doc["c_area_times_pi2_over_3"]
  assert doc["match"] is True


def test_csv_header_and_rows():
  r = run("--csv", "pk", 2, 0)
  assert r.returncode == 0
  rows = list(csv.DictReader(io.StringIO(r.stdout)))
  assert [row["p_k"] for row in rows] == ["7/27", "5/9", "5/27"]


@pytest.mark.parametrize("args,code", [
    (("sv", 1, 1, "--method", "boundary"), 2),
    (("volume", 1, 0), 1),
    (("volume", -1, 3), 1),
    (("freq", "--multicurve", "/nonexistent.json"), 1),
    (("bogus",), 1),
    (("check-all",), 0),
])
def test_exit_codes(args, code):
  assert run(*args).returncode == code


def test_files_are_accepted():
  r = run("--json", "freq", "--multicurve", DATA / "sphere6_split33.json")
  assert r.returncode == 0
  r = run("oracle", "lattice", "--m", "1,1", "--N", 50, "--parity", DATA / "parity_pair.json")
  assert r.returncode == 0


def test_output_is_deterministic():
  for args in [("--json", "volume", 2, 1, "--per-graph"), ("--json", "graphs", 1, 3), ("--csv", "pk", 3, 0)]:
    a, b = run(*args), run(*args)
    assert a.returncode == 0
    assert a.stdout == b.stdout


def test_graph_catalog_round_trips_through_python_json():
  doc = json.loads(run("--json", "graphs", 1, 2).stdout)
  assert (doc["g"], doc["n"]) == (1, 2)
  for entry in doc["graphs"]:
    assert entry["aut_order"] >= 1
    assert {"vertices", "edges", "legs"} <= set(entry["graph"])
