from itertools import product

import pytest

from bennequin.labeling import (
    Labeling,
    constant_labeling,
    enumerate_labelings,
    local_interaction,
    rotation_number,
    sigma,
    split,
    total_interaction,
)
from bennequin.resolution import ResolvedGraph, circle_count, named_graph

from conftest import SMALL_GRAPHS

THETA = named_graph("theta")
THETA2 = named_graph("theta2")
CIRCLE = named_graph("circle")


def lab(g, mapping):
    return Labeling.from_mapping(g, mapping)


def brute_force_labelings(g):
    """Filter all 2^edges assignments by label conservation at every wide edge."""
    out = []
    for labels in product((1, 2), repeat=len(g.edges)):
        f = dict(zip(g.edges, labels))
        ok = True
        for k in range(g.e):
            il, ir, ol, orr = g.wide_edge_ends(k)
            if sorted((f[il], f[ir])) != sorted((f[ol], f[orr])):
                ok = False
                break
        if ok:
            out.append(Labeling.from_mapping(g, f))
    return out


def test_labeling_counts():
    assert len(enumerate_labelings(CIRCLE)) == 2
    assert len(enumerate_labelings(THETA)) == 4
    assert len(enumerate_labelings(THETA2)) == 6


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=str)
def test_backtracking_matches_brute_force(g):
    fast = enumerate_labelings(g)
    assert sorted(f.segment_labels for f in fast) == sorted(
        f.segment_labels for f in brute_force_labelings(g)
    )
    assert len(set(f.segment_labels for f in fast)) == len(fast)


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=str)
def test_constant_labelings_present(g):
    labs = {f.segment_labels for f in enumerate_labelings(g)}
    if g.strands:
        assert constant_labeling(g, 1).segment_labels in labs
        assert constant_labeling(g, 2).segment_labels in labs
        assert len(labs) >= 2


def test_local_interaction_figure_configurations():
    # theta has one wide edge whose left/right strands carry one edge each
    assert local_interaction(THETA, lab(THETA, {(1, 0): 2, (2, 0): 1}), 0) == 1
    assert local_interaction(THETA, lab(THETA, {(1, 0): 1, (2, 0): 2}), 0) == -1
    assert local_interaction(THETA, lab(THETA, {(1, 0): 1, (2, 0): 1}), 0) == 0


def test_swapping_labels_have_no_interaction():
    f = lab(THETA2, {(1, 0): 2, (1, 1): 1, (2, 0): 1, (2, 1): 2})
    assert [local_interaction(THETA2, f, k) for k in range(2)] == [0, 0]


def test_total_interaction_examples():
    assert total_interaction(THETA, constant_labeling(THETA, 1)) == 0
    assert total_interaction(THETA, lab(THETA, {(1, 0): 1, (2, 0): 2})) == -1
    assert total_interaction(THETA, lab(THETA, {(1, 0): 2, (2, 0): 1})) == 1


def test_split_examples():
    sp = split(THETA, constant_labeling(THETA, 1))
    assert sp.graph1 == THETA.stripped() and sp.graph2 == ResolvedGraph(0)
    assert sp.interaction == 0

    sp = split(THETA, lab(THETA, {(1, 0): 1, (2, 0): 2}))
    assert sp.graph1 == CIRCLE and sp.graph2 == CIRCLE
    assert (sp.interaction, sp.r1, sp.r2, sp.crossings_between) == (-1, 1, 1, 0)


def test_split_with_transversal_swaps():
    # two stacked wide edges at position 1 of three strands; strands 1 and 2
    # exchange labels between them, strand 3 is a free label-1 circle
    g = ResolvedGraph.from_positions(3, [1, 1])
    f = lab(g, {(1, 1): 1, (2, 1): 2, (1, 0): 2, (2, 0): 1, (3, 0): 1})
    sp = split(g, f)
    assert sp.crossings_between == 2
    assert sp.graph1 == ResolvedGraph(2) and sp.graph2 == ResolvedGraph(1)
    assert (sp.r1, sp.r2, sp.interaction) == (2, 1, 0)


def test_rotation_number_examples():
    assert rotation_number(CIRCLE) == 1
    assert rotation_number(THETA) == 2
    assert rotation_number(ResolvedGraph(0)) == 0


def test_sigma_examples():
    assert sigma(THETA, constant_labeling(THETA, 1), 1, 1) == 2
    assert sigma(THETA, lab(THETA, {(1, 0): 1, (2, 0): 2}), 1, 1) == -1
    assert sigma(THETA, lab(THETA, {(1, 0): 2, (2, 0): 1}), 1, 2) == 0


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=str)
def test_split_invariants(g):
    r = rotation_number(g)
    for f in enumerate_labelings(g):
        sp = split(g, f)
        assert r == sp.r1 + sp.r2
        assert sp.graph1.e + sp.graph2.e <= g.e
        assert abs(sp.interaction) <= g.e - sp.graph1.e - sp.graph2.e
        assert abs(sp.interaction) <= g.e - sp.graph1.e
        assert circle_count(sp.graph1) == sp.r1 == sp.graph1.strands
        assert circle_count(sp.graph2) == sp.r2 == sp.graph2.strands


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=str)
def test_label_swap_symmetry(g):
    if g.strands:
        sp = split(g, constant_labeling(g, 1))
        assert sp.graph1 == g.stripped() and sp.graph2 == ResolvedGraph(0)
    for f in enumerate_labelings(g):
        a, b = split(g, f), split(g, f.swapped())
        assert (a.graph1, a.graph2) == (b.graph2, b.graph1)
        assert a.interaction == -b.interaction
