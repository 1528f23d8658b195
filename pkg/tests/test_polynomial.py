import pytest
from hypothesis import given, strategies as st

from bennequin.polynomial import LaurentPoly1, LaurentPoly2, adeg_range, q, qint, shift, support

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly1)
nonzero_polys = polys.filter(bool)


def test_qint_examples():
    assert qint(2) == q + q.bar()
    assert qint(3) == LaurentPoly1({2: 1, 0: 1, -2: 1})
    assert qint(0) == 0
    assert qint(1) == 1


def test_shift_examples():
    p = q + q.bar()
    assert shift(p, 1) == LaurentPoly1({2: 1, 0: 1})
    assert shift(p, 0) == p
    assert shift(LaurentPoly1(), 7) == 0


def test_support_examples():
    assert support(LaurentPoly1({3: 1, -1: -1})) == (-1, 3)
    assert support(LaurentPoly1.constant(7)) == (0, 0)
    assert support(LaurentPoly1()) is None


def test_adeg_range_examples():
    assert adeg_range(LaurentPoly2({(2, 1): 1, (4, 0): 1})) == (2, 4)
    assert adeg_range(LaurentPoly2.constant(1)) == (0, 0)
    assert adeg_range(LaurentPoly2()) is None


def test_zero_coefficients_are_dropped():
    p = LaurentPoly1({1: 2, 2: 0}) - LaurentPoly1({1: 2})
    assert p.is_zero()
    assert p.coefficients == {}


def test_rejects_float_coefficients():
    with pytest.raises(TypeError):
        LaurentPoly1({0: 1.5})


@given(polys, polys, polys)
def test_ring_axioms(x, y, w):
    assert (x + y) + w == x + (y + w)
    assert (x * y) * w == x * (y * w)
    assert x * (y + w) == x * y + x * w
    assert x + y == y + x
    assert x * y == y * x
    assert x - x == 0


@given(polys, st.integers(-5, 5), st.integers(-5, 5))
def test_shift_composes(p, j, k):
    assert shift(p, j + k) == shift(shift(p, j), k)


@given(nonzero_polys, nonzero_polys)
def test_support_is_additive(x, y):
    (a0, a1), (b0, b1) = support(x), support(y)
    assert support(x * y) == (a0 + b0, a1 + b1)


@given(polys, nonzero_polys)
def test_exact_division_inverts_multiplication(x, d):
    assert (x * d).divide_exact(d) == x


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        LaurentPoly1({0: 1}).divide_exact(q + 1)


def test_text_form_is_sorted_with_signs():
    assert str(LaurentPoly1({1: 1, -1: -2})) == "-2*q^-1 +1*q^1"
    assert str(LaurentPoly1()) == "0"


@given(polys)
def test_json_roundtrip(p):
    assert LaurentPoly1.from_json(p.to_json()) == p


def test_two_variable_json_roundtrip():
    p = LaurentPoly2({(2, 0): 2, (4, 0): -1, (2, 2): 1, (1, -1): 3})
    assert LaurentPoly2.from_json(p.to_json()) == p


def test_substitute_clears_negative_z_powers():
    # (a - a^-1)/z at a = q^n, z = q - q^-1 is the quantum integer [n]
    delta = LaurentPoly2({(1, -1): 1, (-1, -1): -1})
    for n in range(1, 5):
        assert delta.substitute(LaurentPoly1.monomial(n), q - q.bar()) == qint(n)


def test_mirror_substitution_is_an_involution():
    p = LaurentPoly2({(2, 0): 2, (3, 1): -1, (-1, 2): 5})
    assert p.mirror().mirror() == p
    assert p.mirror() == LaurentPoly2({(-2, 0): 2, (-3, 1): 1, (1, 2): -5})
