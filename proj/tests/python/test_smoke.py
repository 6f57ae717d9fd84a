import json
import os
import subprocess

import pytest

import splitcw


def test_named_graph_round_trip():
    g = splitcw.named("@P4")
    assert splitcw.order(g) == 4
    assert sorted(splitcw.edges(g)) == [(0, 1), (1, 2), (2, 3)]
    assert splitcw.are_isomorphic(g, splitcw.complement(g))


def test_single_vertex_graph6_is_not_a_name():
    assert splitcw.order("@") == 1
    assert splitcw.clique_width("@") == 1
    assert splitcw.classify("split", "@")["outcome"] == "bounded"


def test_clique_width_spot_values():
    assert splitcw.clique_width("@P4") == 3
    assert splitcw.clique_width("@C5") == 3
    assert splitcw.clique_width("@K5") == 2
    assert splitcw.cw_expression("@P4", 2) is None
    expr = splitcw.cw_expression("@P4", 3)
    graph, labels = splitcw.evaluate(expr)
    assert splitcw.are_isomorphic(graph, "@P4")
    assert max(labels) <= 3


def test_rp1_expression_rebuilds_p4():
    expr = splitcw.rp1_expression("@P4", [1, 2], [0, 3], 3)
    graph, _ = splitcw.evaluate(expr)
    assert splitcw.are_isomorphic(graph, "@P4")
    with pytest.raises(splitcw.PreconditionError):
        splitcw.rp1_expression("@P4", [1, 2], [0, 3], 2)


def test_split_recognition():
    assert splitcw.is_split("@P4")
    assert not splitcw.is_split("@C4")
    assert splitcw.split_partitions("@P4") == [([1, 2], [0, 3])]
    assert len(splitcw.split_partitions("@Q")) == 1


def test_classification_outcomes():
    assert splitcw.classify("split", "@F4")["outcome"] == "open"
    assert splitcw.classify("split", "@co-(F5)")["outcome"] == "open"
    assert splitcw.classify("split", "@2K2")["outcome"] == "unbounded"
    k5 = splitcw.classify("split", "@K5")
    assert k5["outcome"] == "bounded" and k5["clauses"][0] == "H̄ ≅ rP1"
    assert splitcw.classify("chordal", "@F1")["outcome"] == "open"
    assert splitcw.classify("bipartite", "@C4")["outcome"] == "unbounded"
    assert splitcw.classify("weakly-chordal", "@P5")["outcome"] == "unbounded"
    white = json.dumps({"black": [], "white": [0], "edges": []})
    assert splitcw.classify_labelled(white)["outcome"] == "bounded"


def test_enumeration_counts():
    assert [len(splitcw.enumerate(n)) for n in range(6)] == [1, 1, 2, 4, 11, 34]
    assert [len(splitcw.enumerate(n, split=True)) for n in range(1, 6)] == [1, 2, 4, 9, 21]


def test_claim_report_and_determinism():
    report = splitcw.verify_claim("CLAIM-KEYPART", 7)
    assert report["outcome"] == "holds"
    assert report["counts"]["graphs"] > 0
    assert splitcw.verify_claim("CLAIM-KEYPART", 7, jobs=4) == report
    negative = splitcw.verify_claim("CLAIM-F1-OBS1", 7, negative_control=True)
    assert negative["outcome"] == "counterexample"
    with pytest.raises(splitcw.UnknownClaimError):
        splitcw.verify_claim("CLAIM-NOPE", 5)


def test_reduction_and_errors():
    star = splitcw.named("@K1,6")
    assert splitcw.thm7_reduce(star, [0], [1, 2, 3, 4, 5, 6]) == splitcw.named("@7P1")
    with pytest.raises(splitcw.FormatError):
        splitcw.order("A")
    with pytest.raises(splitcw.SizeLimitError):
        splitcw.clique_width(splitcw.named("@P11"))


@pytest.mark.skipif("SPLITCW_CLI" not in os.environ, reason="command-line tool not built")
def test_cli_verify_exit_codes():
    cli = os.environ["SPLITCW_CLI"]
    ok = subprocess.run([cli, "verify", "--claim", "CLAIM-F2-CLM", "--max-n", "7"], capture_output=True, text=True)
    assert ok.returncode == 0
    assert json.loads(ok.stdout)["outcome"] == "holds"
    bad = subprocess.run([cli, "verify", "--claim", "CLAIM-F2-CLM", "--max-n", "7", "--negative-control"],
                         capture_output=True, text=True)
    assert bad.returncode == 1
    assert json.loads(bad.stdout)["counterexample"]["graph6"]
