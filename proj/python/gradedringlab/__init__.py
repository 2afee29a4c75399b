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
"""Finite graded rings: construction, cleanness decisions and theorem checks."""

import json

from . import _gradedringlab as _core
from ._gradedringlab import GradedRing, GradedRingError, __version__

__all__ = [
    "GradedRing",
    "GradedRingError",
    "__version__",
    "analyze",
    "build",
    "check",
    "check_ids",
    "element",
    "fixture",
    "fixture_names",
    "flag_names",
    "graded_clean",
    "graded_nil_clean",
    "graded_strongly_nil_clean",
    "parse_spec",
    "search_gradings",
]

fixture = _core.fixture
fixture_names = _core.fixture_names
flag_names = _core.flag_names
check_ids = _core.check_ids
parse_spec = _core.parse_spec


def build(ring):
    return json.loads(ring.build_json())


def analyze(ring):
    return json.loads(ring.analyze_json())


def element(ring, literal):
    """Decompositions and power data of one element given as a literal."""
    return json.loads(ring.element_json(json.dumps(literal)))


def graded_nil_clean(ring):
    return json.loads(ring.graded_nil_clean_json())


def graded_strongly_nil_clean(ring):
    return json.loads(ring.graded_strongly_nil_clean_json())


def graded_clean(ring):
    return json.loads(ring.graded_clean_json())


def check(fixtures=(), specs=(), checks=("all",), threads=0):
    """Run theorem checks on catalog fixtures and spec texts."""
    return json.loads(_core.check_json(list(fixtures), list(specs), list(checks), threads))


def search_gradings(ring, group="cyclic(2)"):
    return json.loads(_core.search_json(ring, group))
