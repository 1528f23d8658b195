import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bennequin.corpus import all_braids
from bennequin.diagram import BraidWord, braid_to_diagram, parse_braid, parse_diagram, seifert_stats
from bennequin.errors import ResourceCapError
from bennequin.homfly import (
    DELTA,
    freeze_conventions,
    homfly,
    mfw_degrees,
    sln_from_homfly,
    sln_state_sum,
    sln_vs_homfly_check,
    smooth_crossing,
    state_sum_terms,
    switch_crossing,
)
from bennequin.polynomial import LaurentPoly1, LaurentPoly2, qint

A = LaurentPoly2.monomial(1, 0)
A_INV = LaurentPoly2.monomial(-1, 0)
Z = LaurentPoly2.monomial(0, 1)
ONE = LaurentPoly2.constant(1)

SMALL = [b for b in all_braids(3, 4)]


def poly2(terms):
    return LaurentPoly2({k: v for k, v in terms.items()})


def test_unknot_and_unlink():
    assert homfly(parse_braid("1:")) == ONE
    assert homfly(parse_braid("2:")) == DELTA
    assert homfly(parse_braid("2: 1")) == ONE
    assert homfly(parse_braid("2: -1")) == ONE
    assert DELTA == (A - A_INV) * LaurentPoly2.monomial(0, -1)


def test_trefoil_golden(trefoil):
    assert homfly(trefoil) == poly2({(2, 0): 2, (4, 0): -1, (2, 2): 1})
    assert homfly(trefoil.mirror()) == poly2({(-2, 0): 2, (-4, 0): -1, (-2, 2): 1})


def test_figure_eight_golden(figure_eight):
    expected = poly2({(-2, 0): 1, (0, 0): -1, (0, 2): -1, (2, 0): 1})
    assert homfly(figure_eight) == expected
    assert homfly(figure_eight.mirror()) == expected


def test_hopf_link_from_diagram_text():
    d = parse_diagram("X + 1 3 2 4\nX + 4 2 3 1\n")
    # positive Hopf link: a^2 * delta - a z
    assert homfly(d) == poly2({(3, -1): 1, (1, -1): -1, (1, 1): -1})
    assert homfly(d) == homfly(parse_braid("2: 1 1"))


def test_skein_resubstitution_random_nodes():
    rng = random.Random(20261016)
    pool = [b for b in all_braids(3, 5) if b.letters]
    for b in rng.sample(pool, 20):
        d = braid_to_diagram(b)
        i = rng.randrange(len(d.crossings))
        p = homfly(d)
        sw = homfly(switch_crossing(d, i))
        sm = homfly(smooth_crossing(d, i))
        if d.crossings[i].sign > 0:
            assert p == A * A * sw - A * Z * sm, str(b)
        else:
            assert p == A_INV * A_INV * sw + A_INV * Z * sm, str(b)


@pytest.mark.parametrize("b", SMALL, ids=str)
def test_markov_invariance(b):
    p = homfly(b)
    if b.letters:
        rotated = BraidWord(b.strands, b.letters[1:] + b.letters[:1])
        assert homfly(rotated) == p
    for s in (1, -1):
        stab = BraidWord(b.strands + 1, b.letters + (s * b.strands,))
        assert homfly(stab) == p


@pytest.mark.parametrize("b", SMALL, ids=str)
def test_mirror_substitution(b):
    assert homfly(b.mirror()) == homfly(b).mirror()


@pytest.mark.parametrize("n", range(1, 6))
def test_sln_of_unknot(n):
    assert sln_state_sum(parse_braid("1:"), n) == qint(n)
    assert sln_state_sum(parse_braid("2: 1"), n) == qint(n)
    assert sln_from_homfly(ONE, n) == qint(n)


def test_sln_trefoil_n2(trefoil):
    expected = LaurentPoly1({1: 1, 3: 1, 5: 1, 9: -1})
    assert sln_state_sum(trefoil, 2) == expected
    assert sln_from_homfly(homfly(trefoil), 2) == expected


@pytest.mark.parametrize("b", SMALL, ids=str)
def test_sln_matches_homfly_small(b):
    for n in (2, 3):
        assert sln_vs_homfly_check(b, n).holds


def test_freeze_conventions_defaults(trefoil, figure_eight):
    assert freeze_conventions() == ("alternating", "q^n")
    assert not sln_vs_homfly_check(trefoil, 2, sign="positive").holds
    assert not sln_vs_homfly_check(trefoil, 2, specialization="q^-n").holds
    assert not sln_vs_homfly_check(figure_eight, 3, sign="positive", specialization="q^-n").holds


@pytest.mark.parametrize("b", SMALL, ids=str)
def test_state_sum_summands_in_window(b):
    st_ = seifert_stats(b)
    for n in (2, 3):
        lo = (n - 1) * (st_.w - st_.O) - 2 * st_.c_minus
        hi = (n - 1) * (st_.w + st_.O) + 2 * st_.c_plus
        for _, _, value in state_sum_terms(b, n):
            sup = value.support()
            assert sup is None or lo <= sup[0] <= sup[1] <= hi


def test_mfw_examples(trefoil):
    r = mfw_degrees(trefoil)
    assert (r.w_minus_O, r.w_plus_O) == (1, 5)
    assert (r.min_a, r.max_a) == (2, 4) and r.holds
    assert (r.min_a_unnormalized, r.max_a_unnormalized) == (1, 5) and r.sharp
    u = mfw_degrees(parse_braid("1:"))
    assert (u.min_a, u.max_a, u.w_minus_O, u.w_plus_O) == (0, 0, -1, 1)
    assert u.min_a_unnormalized == -1 and u.max_a_unnormalized == 1


@pytest.mark.parametrize("k", [3, 5, 7])
def test_mfw_sharp_on_torus_braids(k):
    b = BraidWord(2, (1,) * k)
    r = mfw_degrees(b)
    assert r.sharp and r.holds_unnormalized
    assert (r.min_a, r.max_a) == (k - 1, k + 1)


def test_mfw_single_crossing_only_minimum_attained():
    r = mfw_degrees(parse_braid("2: 1"))
    assert r.min_a_unnormalized == r.w_minus_O == -1
    assert r.max_a_unnormalized == 1 < r.w_plus_O == 3


def test_skein_cap():
    with pytest.raises(ResourceCapError):
        homfly(parse_braid("2: 1 1 1 1 1"), max_crossings=4)


@settings(max_examples=30, deadline=None)
@given(
    st.integers(2, 3).flatmap(
        lambda s: st.tuples(
            st.just(s),
            st.lists(st.sampled_from([g for k in range(1, s) for g in (k, -k)]), max_size=6),
        )
    )
)
def test_mfw_window_holds(data):
    b = BraidWord(*data)
    r = mfw_degrees(b)
    assert r.holds and r.holds_unnormalized
