# Copyright 2026 The gradedringlab Authors
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

import json
import os
import subprocess
from pathlib import Path

import pytest

GRL = os.environ.get("GRL_BIN", str(Path(__file__).resolve().parents[2] / "build" / "grl"))
SPECS = Path(__file__).resolve().parents[2] / "specs"


def run(*args):
    return subprocess.run([GRL, *args], capture_output=True, text=True, timeout=300)


def test_build_checkerboard_spec():
    p = run("build", "--spec", str(SPECS / "checkerboard.grl"), "--no-timestamp")
    assert p.returncode == 0, p.stderr
    rep = json.loads(p.stdout)
    assert rep["schema"] == "gradedringlab-report v1"
    assert rep["build"]["ring"]["size"] == 16


def test_check_catalog_is_deterministic():
    a = run("check", "--catalog", "all", "--no-timestamp", "--threads", "1")
    b = run("check", "--catalog", "all", "--no-timestamp", "--threads", "4")
    assert a.returncode == 0, a.stderr
    assert a.stdout == b.stdout
    summary = json.loads(a.stdout)["check"]["summary"]
    assert summary["FAILED"] == 0
    assert summary["failed-expected"] >= 1


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.grl"
    bad.write_text("gradedringlab-spec v1\nring = zmod(4\n")
    assert run("build", "--spec", str(bad)).returncode == 2
    assert run("build", "--spec", str(SPECS / "bad-direct-sum.grl")).returncode == 1
    assert run("analyze", "--catalog", "M2-F2-checkerboard", "--max-homogeneous", "2").returncode == 3
    assert run("check", "--checks", "no-such-check", "--catalog", "Z4-trivial").returncode == 2
    assert run("no-such-command").returncode == 2


def test_corrupted_expectation_fails(tmp_path):
    text = (SPECS / "checkerboard.grl").read_text()
    assert "expect graded-nil-clean = false" in text
    spec = tmp_path / "corrupted.grl"
    spec.write_text(text.replace("expect graded-nil-clean = false", "expect graded-nil-clean = true"))
    p = run("check", "--spec", str(spec), "--no-timestamp")
    assert p.returncode == 1
    results = json.loads(p.stdout)["check"]["results"]
    assert any(r["check"] == "fixture-flags" and r["status"] == "FAILED" for r in results)


def test_search_gradings_table():
    p = run("search-gradings", "--spec", str(SPECS / "z4-trivial.grl"), "--table")
    assert p.returncode == 0, p.stderr
    assert "grading" in p.stdout


@pytest.mark.parametrize("cmd", ["build", "analyze", "check", "search-gradings", "catalog"])
def test_help(cmd):
    assert run(cmd, "--help").returncode == 0
