import json
import os
import pathlib

import pytest

import ccq

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"

NODAL = {
    "curve": {"n": 3, "omega": "x2^2 - x1^3 - x1^2", "rhos": ["2*x1^2 + 2*x1"]},
    "queries": {"lambda": "x1^2 - 11*x1 + 24", "thetas": ["-18*x1 + 24", "-x1 - 7"]},
}


def test_apparent_singularities():
    r = ccq.apparent_singularities("x2^2 - x1^3 - x1^2", ["2*x1^2 + 2*x1"])
    assert r["q_app"] == "x1"
    assert r["criterion_degenerate"] is False
    assert ccq.apparent_singularities("x1^2 + x2^2 - 1")["q_app"] == "1"


def test_kernels():
    assert ccq.resultant("x2^2 + x1^2 - 1", "2*x2") == "4*x1^2 - 4"
    sr1, sr10 = ccq.first_subresultant("x2^2 - x1^3 - x1^2", "2*x2")
    assert sr1 == "2" and sr10 == "0"
    roots = ccq.isolate("x1^2 - 2")
    assert len(roots) == 2
    lo, hi = roots[1]
    from fractions import Fraction

    assert Fraction(lo) ** 2 < 2 < Fraction(hi) ** 2


def test_commands():
    assert ccq.appsing(NODAL)["q_app"] == "x1"
    assert ccq.connect(NODAL) == {"partition": [[1, 2]], "components": 1}
    assert ccq.connect(CORPUS / "p02_concentric_circles.json") == {"partition": [[1], [2]], "components": 2}
    assert ccq.validate(NODAL)["valid"] is True
    dot = ccq.topo(NODAL)
    assert dot.startswith('graph "topology" {') and "apparent_node" in dot


def test_topology_objects():
    t = ccq.topology(json.dumps(NODAL))
    assert t["components"] == 1
    assert len(t["graph"]["v_app"]) == 1
    assert len(t["resolved"]["vertices"]) == len(t["graph"]["vertices"]) - 1
    kinds = {v["kind"] for v in t["graph"]["vertices"]}
    assert {"apparent_node", "control"} <= kinds


def test_errors():
    with pytest.raises(ccq.CommandError) as e:
        ccq.validate({"curve": {"omega": "x2^2"}})
    assert e.value.exit_code == 2
    with pytest.raises(ccq.CommandError) as e:
        ccq.connect("{not json")
    assert e.value.exit_code == 3
    with pytest.raises(ccq.Error, match="ParseError"):
        ccq.resultant("x2 +", "x2")


def test_writes_plots(tmp_path):
    dot = tmp_path / "g.dot"
    ccq.topo(NODAL, dot=os.fspath(dot))
    assert dot.read_text().startswith('graph "topology"')
