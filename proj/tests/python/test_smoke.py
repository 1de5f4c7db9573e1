import os
import subprocess

import pytest

import fibrous

SIERPINSKI = {"nB": 2, "opens": [[], [1], [0, 1]]}


def test_sierpinski_round_trip():
    g = fibrous.from_top(SIERPINSKI)
    assert g["nA"] == 3
    assert g["R"] == [[1], [0, 1], [0, 1]]
    assert fibrous.check(g)["passed"]
    assert fibrous.to_top(g)["opens"] == SIERPINSKI["opens"]
    assert fibrous.to_top(g, algorithm="brute") == fibrous.to_top(g)
    assert fibrous.roundtrip_fg(SIERPINSKI)["passed"]
    w = fibrous.roundtrip_gf(g)
    assert w["phi"] == [0, 1, 2]


def test_umap_and_equivalence():
    g = fibrous.from_top(SIERPINSKI)
    u = fibrous.umap(g)
    assert u == {"u": [1, 0], "R0": [[0, 0], [0, 1], [1, 1]]}
    assert fibrous.equivalence(g, g) == {"phi": [0, 1, 2], "gamma": [0, 1, 2]}
    d = fibrous.from_top({"nB": 2, "opens": [[], [0], [1], [0, 1]]})
    i = fibrous.from_top({"nB": 2, "opens": [[], [0, 1]]})
    assert fibrous.equivalence(d, i) is None


def test_violation_report():
    g = fibrous.from_top(SIERPINSKI)
    for t in g["d"]:
        if t[:2] == [1, 1]:
            t[2] = 1
    del g["s"], g["m"]
    report = fibrous.check(g)
    assert not report["passed"]
    assert report["violations"][0]["tag"] == "F1"
    assert report["violations"][0]["witness"] == [1, 1]


def test_structure_errors():
    with pytest.raises(ValueError):
        fibrous.check({"nB": 1, "nA": 1, "p": [4], "R": [[0]], "d": [[0, 0, 0]]})
    with pytest.raises(ValueError):
        fibrous.check("{not json")
    with pytest.raises(ValueError):
        fibrous.sample("no-such-space")


def test_topology_counts():
    assert [len(fibrous.topologies(n)) for n in range(5)] == [1, 1, 4, 29, 355]


def test_lazy_instances():
    assert "padic:3" in fibrous.standard_instances()
    assert fibrous.sample("padic:3", samples=2000, seed=42)["passed"]
    bad = fibrous.sample("mutant-metric-q", samples=3000)
    assert not bad["passed"]
    assert bad["violations"][0]["witness"]["instance"] == "mutant-metric-q"
    assert fibrous.modulus("q-lipschitz2", samples=1000)["passed"]
    assert not fibrous.modulus("q-lipschitz2-wrong", samples=3000)["passed"]


def test_run_cli():
    code, out, _ = fibrous.run_cli(["enum-top", 2])
    assert code == 0
    assert out.startswith("4 topologies on 2 points")
    code, _, err = fibrous.run_cli(["check", "-"], stdin="{")
    assert code == 2
    assert "line 1" in err


@pytest.mark.skipif("FIBROUS_CLI" not in os.environ, reason="command line binary not located")
def test_binary_seed_is_printed():
    out = subprocess.run(
        [os.environ["FIBROUS_CLI"], "sample", "cantor", "--samples", "200", "--seed", "3"],
        capture_output=True, text=True, check=True,
    ).stdout
    assert "seed: 3" in out
