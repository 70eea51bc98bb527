# Copyright 2026 The twistcert Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import twistcert as tc


def test_version():
    assert tc.__version__ == "0.1.0"


def test_generators():
    assert tc.generator("grs", "5", [0, 1, 2, 3], 2) == [[1, 1, 1, 1], [0, 1, 2, 3]]
    assert tc.generator("tgrs", "5", range(5), 2, t=2, h=1) == [[1, 1, 1, 1, 1], [0, 2, 0, 0, 3]]
    assert tc.generator("etgrs", "5", range(5), 2, t=2, h=1)[1] == [0, 2, 0, 0, 3, 1]


def test_invalid_parameters_raise():
    with pytest.raises(ValueError, match="h>0 required for extended code"):
        tc.code("etgrs", "5", range(5), 2, t=2, h=0)
    with pytest.raises(ValueError, match="not prime"):
        tc.code("grs", "6", range(4), 2)


def test_code_operations():
    c = tc.code("grs", "5", [0, 1, 2, 3], 2)
    assert (c.length, c.dimension) == (4, 2)
    assert c.dual() == tc.code("grs", "5", [0, 1, 2, 3], 2, v=[4, 3, 2, 1])
    assert c.dual().dual() == c
    assert c.min_distance() == 3
    assert c.is_grs() is True
    assert tc.Code("5", c.generator) == c

    sq = tc.code("grs", "11", range(10), 6).dual().schur_square()
    assert sq.dimension == 7

    tw = tc.code("tgrs", "5", range(5), 2, t=2, h=1)
    assert tw.min_distance() == 2
    assert tw.is_grs() is False
    assert tw.min_distance(cap=10) is None


def test_u_vector_and_power_sums():
    assert tc.u_vector("5", [0, 1, 2, 3]) == [4, 3, 2, 1]
    assert tc.u_vector("7", [1, 2, 3]) == [4, 6, 4]
    assert [tc.power_sum("5", [0, 1, 2, 3], m) for m in (2, 3, 4)] == [0, 4, 4]


def test_parity_check_annihilates_generator():
    g = tc.generator("tgrs", "11", range(9), 4, t=3, h=1, eta=5)
    h = tc.parity_check("11", range(9), 4, t=3, h=1, eta=5)
    assert len(h) == 5
    for hr in h:
        for gr in g:
            assert sum(a * b for a, b in zip(hr, gr)) % 11 == 0


def test_conditions():
    assert tc.conditions(12, 7, 5, 3)["dual_square"][0]["holds"]
    assert tc.conditions(12, 4, 2, 1)["low_rate"]["holds"]


def test_certify():
    rec = tc.certify("tgrs", "13", range(12), 6, t=1, h=2)
    assert rec["verdict"]["kind"] == "CertifiedNonGRS"
    assert rec["verdict"]["certificate"]["kind"] == "dual-square-dim"
    assert rec["square_dimension"] >= 12
    assert tc.verify_record(rec) == (True, True, "verified")

    ext = tc.certify("etgrs", "11", range(9), 5, t=2, h=2, eta=2)
    assert ext["verdict"]["certificate"]["word"] == [0] * 9 + [4]

    grs = tc.certify("grs", "13", range(12), 7)
    assert grs["verdict"]["kind"] == "GRSConsistent"
    assert grs["square_dimension"] == 9


def test_sweep_roundtrip():
    config = {"fields": ["5..7"], "families": ["grs", "tgrs"], "n": "4..5", "alpha": "first-n+sample:1", "seed": 3}
    header, records, footer = tc.sweep(config)
    assert header["schema"] == 1
    assert footer["summary"]["records"] == len(records) > 0
    assert footer["summary"]["completeness_violations"] == 0
    assert tc.sweep(config, jobs=3)[1] == records
    for rec in records:
        has, ok, detail = tc.verify_record(rec, header["config"])
        if has:
            assert ok, detail
