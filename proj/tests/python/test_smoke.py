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

import gradedringlab as grl
import pytest


def test_catalog_and_flags():
    names = grl.fixture_names()
    assert len(names) >= 15
    assert "M2-F2-checkerboard" in names
    assert "graded-nil-clean" in grl.flag_names()
    assert "implication-1" in grl.check_ids()


def test_checkerboard_verdicts():
    r = grl.fixture("M2-F2-checkerboard")
    assert r.size == 16
    assert r.labels == ["e", "g"]
    assert r.is_group_graded
    v = grl.graded_nil_clean(r)
    assert v["holds"] is False
    assert v["witness"] == [[0, 1], [1, 0]]
    assert r.flag("identity-nil-clean") is True


def test_zgraded_element():
    r = grl.fixture("M2-F2-Zgraded")
    assert grl.graded_nil_clean(r)["holds"] is True
    e = grl.element(r, [[0, 1], [0, 0]])
    assert e["square"] == [[0, 0], [0, 0]]
    assert e["nilpotency_index"] == 2


def test_parse_spec_and_errors():
    text = "gradedringlab-spec v1\nname = \"z4\"\nring = zmod(4)\n"
    r = grl.parse_spec(text)
    assert r.name == "z4"
    assert r.size == 4
    with pytest.raises(grl.GradedRingError):
        grl.parse_spec("gradedringlab-spec v1\nring = zmod(4\n")
    with pytest.raises(grl.GradedRingError):
        grl.fixture("no-such-fixture")


def test_check_and_search():
    rep = grl.check(fixtures=["M2-F2-checkerboard"], checks=["implication-1"])
    results = rep["results"]
    assert [x["status"] for x in results] == ["failed-expected"]
    s = grl.search_gradings(grl.parse_spec("gradedringlab-spec v1\nring = matrix(zmod(2), 2)\n"))
    assert s["additive_subgroups"] == 67
    assert len(s["gradings"]) == 5
