import json
from collections import Counter
from math import comb

import pytest

from bennequin.corpus import all_braids
from bennequin.diagram import parse_braid
from bennequin.errors import InputError, ResourceCapError
from bennequin.resolution import (
    ResolvedGraph,
    Slice,
    all_graphs,
    circle_count,
    grading_shift,
    oriented_resolution,
    parse_graph,
    resolve_all,
)


def test_resolve_all_examples():
    rs = resolve_all(parse_braid("2: 1 1 1"))
    assert len(rs) == 8
    assert (rs[0].e_plus, rs[0].e_minus) == (0, 0)
    assert rs[-1].e_plus == 3

    (only,) = resolve_all(parse_braid("1:"))
    assert only.graph.strands == 1 and only.graph.e == 0

    rs = resolve_all(parse_braid("3: 1 -2"))
    assert len(rs) == 4
    assert (rs[-1].e_plus, rs[-1].e_minus, rs[-1].hom_degree) == (1, 1, 0)


def test_enumeration_order_is_a_binary_counter():
    rs = resolve_all(parse_braid("3: 1 -2 2"))
    for mask, r in enumerate(rs):
        kinds = [s.kind for s in r.graph.slices]
        assert kinds == ["wide" if mask >> i & 1 else "id" for i in range(3)]


def test_resolution_cap():
    with pytest.raises(ResourceCapError):
        resolve_all(parse_braid("2: " + " ".join(["1"] * 21)))
    assert len(resolve_all(parse_braid("2: 1 1 1")), ) == 8
    with pytest.raises(ResourceCapError):
        resolve_all(parse_braid("2: 1 1 1"), max_crossings=2)


def test_oriented_resolution_examples():
    for text, circles in [("2: 1 1 1", 2), ("3: 1 -2", 3), ("1:", 1)]:
        g = oriented_resolution(parse_braid(text))
        assert g.e == 0
        assert circle_count(g) == circles


def test_grading_shift_examples():
    assert grading_shift(2, 0, 3, 2) == 5
    for w in (-3, 0, 4):
        for n in (1, 2, 5):
            assert grading_shift(0, 0, w, n) == (n - 1) * w
    assert grading_shift(1, 1, 0, 4) == 0


def test_wide_edge_counts_are_bounded_by_crossing_counts():
    for b in all_braids(3, 4):
        for r in resolve_all(b):
            assert r.e_plus <= b.c_plus
            assert r.e_minus <= b.c_minus
            assert r.hom_degree == r.e_plus - r.e_minus


def test_wide_edge_counts_are_binomial():
    b = parse_braid("3: 1 -2 1 2 -1")
    counts = Counter((r.e_plus, r.e_minus) for r in resolve_all(b))
    cp, cm = b.c_plus, b.c_minus
    assert counts == {(i, j): comb(cp, i) * comb(cm, j) for i in range(cp + 1) for j in range(cm + 1)}


def test_traced_circles_equal_strands():
    # removing wide edges leaves one upward circle per strand
    for g in all_graphs(3, 3):
        assert circle_count(g) == g.strands


def test_regular_edges_per_strand():
    theta = parse_graph("theta")
    assert theta.edges == ((1, 0), (2, 0))
    g = ResolvedGraph.from_positions(3, [1, 2, 1])
    assert len(g.edges) == 2 + 3 + 1
    assert g.wide_edge_ends(1) == ((2, 0), (3, 0), (2, 1), (3, 0))


def test_positions_are_validated():
    with pytest.raises(InputError):
        ResolvedGraph.from_positions(2, [2])
    with pytest.raises(InputError):
        Slice("cross", 1)


def test_json_format():
    r = resolve_all(parse_braid("3: 1 -2"))[1]
    data = json.loads(json.dumps(r.to_json()))
    assert data == {
        "strands": 3,
        "slices": [
            {"pos": 1, "kind": "wide", "origin": "+"},
            {"pos": 2, "kind": "id", "origin": "-"},
        ],
        "e_plus": 1,
        "e_minus": 0,
        "hom_degree": 1,
    }
    assert ResolvedGraph.from_json(data) == r.graph


def test_graph_literals():
    assert parse_graph("graph 3: 1 2") == ResolvedGraph.from_positions(3, [1, 2])
    assert parse_graph("circle").strands == 1
    with pytest.raises(InputError):
        parse_graph("banana")
