import json

import pytest

import dwq


def test_groups():
    s3 = dwq.s3()
    assert s3.order == 6 and not s3.is_abelian()
    r, t = s3.parse_element("r"), s3.parse_element("t")
    assert s3.element_name(s3(r, r)) == "r2"
    assert s3(t, t) == 0
    g = dwq.product([dwq.cyclic(2), dwq.cyclic(3)])
    assert g.order == 6 and g.element_name(5) == "(1,2)"
    assert dwq.closure(s3, [r]) == [0, 1, 2]


def test_gsd_and_anyons():
    assert dwq.compute({"group": 2, "mode": "gsd"})["gsd"] == 4
    anyons = dwq.compute({"group": "S3", "mode": "anyons"})
    assert [a["name"] for a in anyons][:3] == ["(e,G0)", "(e,G1)", "(e,G2)"]
    assert sum(a["dim"] ** 2 for a in anyons) == 36
    assert set(anyons[0]) == {"name", "class", "irrep", "dim", "characters"}


def test_fusion_table_matches_s3_ht():
    cfg = {"group": "S3", "cocycle": [{"type": "S3", "p": 4}], "boundary": {"generators": ["t"]},
           "mode": "fusion-table"}
    t = dwq.compute(cfg, oracle=True)
    assert t["cols"] == ["(H,0)", "(H,1)", "(r,0)"]
    assert t["m"][t["rows"].index("(e,G2)")] == [1, 1, 0]


def test_boundary_anyons_use_double_cosets():
    cfg = {"group": "S3", "boundary": {"generators": ["r"]}, "mode": "boundary-anyons"}
    out = dwq.compute(cfg)
    assert {a["double_coset"] for a in out} == {"H", "t"}


def test_errors_and_exit_codes():
    rc, out, err = dwq.run({"group": 2, "surprise": True})
    assert rc == 2 and out == "" and "surprise" in err
    bad = {"group": "S3", "cocycle": [{"type": "S3", "p": 1}], "boundary": {"generators": ["r"]},
           "mode": "lagrangian"}
    assert dwq.run(bad)[0] == 3
    with pytest.raises(dwq.BoundaryInvalid):
        dwq.compute(bad)


def test_tunneling_has_classification():
    cfg = {"wall": {"condensation": {"kind": "typeI", "N": 2, "n": 1}}, "mode": "tunneling"}
    rc, out, _ = dwq.run(cfg)
    assert rc == 0
    header, first = out.splitlines()[:2]
    assert header.endswith(",kind") and first.endswith(",condensed")


def test_deterministic_json():
    cfg = json.dumps({"group": [3, 3], "cocycle": [{"type": "II", "n": 1}],
                      "boundary": {"generators": [[0, 1]]}, "mode": "fusion-table"})
    assert dwq.run(cfg, format="json") == dwq.run(cfg, format="json")


def test_golden_appendix():
    results = dwq.verify_golden("appendixA")
    assert len(results) == 5 and all(ok for _, ok, _ in results)
