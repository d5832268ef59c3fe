import json

import pytest

import monoconn as mc


def c5():
    return mc.generate("cycle", n=5)


def test_named_values():
    assert mc.tmc(c5())["value"] == 4
    assert mc.mvc(c5())["value"] == 5
    assert mc.tmc(mc.generate("complete", n=4))["value"] == 10
    assert mc.mc(mc.generate("wheel", n=6))["value"] == 7
    assert mc.leaf_number(mc.generate("petersen")) == 6


def test_graph6_and_edge_list():
    g = mc.parse_graph6("Dhc")
    assert (g.n, g.m) == (5, 5)
    assert g == c5()
    assert g.graph6() == "Dhc"
    assert mc.parse_edge_list("3 2\n0 1\n1 2\n").edges == [(0, 1), (1, 2)]
    with pytest.raises(ValueError, match="trailing bits nonzero"):
        mc.parse_graph6("A@")
    with pytest.raises(ValueError, match="duplicate edge"):
        mc.Graph(3, [(0, 1), (1, 0)])


def test_witness_verifies():
    g = mc.generate("wheel", n=7)
    report = mc.tmc(g)
    check = mc.verify(g, report["witness"], "tmc")
    assert check["ok"]
    assert check["colors"] == report["value"]
    bad = {"vertex_colors": list(range(5)), "edge_colors": [[u, v, 10 + i] for i, (u, v) in enumerate(c5().edges)]}
    result = mc.verify(c5(), bad)
    assert not result["ok"]
    assert result["uncovered"] is not None


def test_constructions():
    assert mc.construct_wheel(5)["colors"] == 9
    assert mc.construct_multipartite([2, 1, 1])["colors"] == 7
    built = mc.construct_tree_based(c5())
    assert built["colors"] == 4
    assert mc.verify(built["graph"], built["coloring"])["ok"]
    with pytest.raises(ValueError):
        mc.construct_wheel(4)


def test_check_record_is_json():
    rec = mc.check(mc.generate("complete", n=4))
    assert json.loads(json.dumps(rec)) == rec
    names = {v["name"]: v for v in rec["verdicts"]}
    assert names["sum_upper_bound"]["note"] == "equality & complete: consistent"
    assert not rec["violated"]


def test_size_guard():
    with pytest.raises(RuntimeError, match="out of range"):
        mc.tmc(mc.generate("cycle", n=8), max_exact_n=6)


def test_survey_and_hunt():
    a = mc.survey(7, 0.5, 20, 5)
    assert a == mc.survey(7, 0.5, 20, 5)
    assert 0.0 <= a["fraction_identity"] <= 1.0
    report = mc.hunt("conjecture1", mc.builtin_corpus(4))
    assert report["findings"] == []
