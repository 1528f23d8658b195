"""HOMFLY polynomial by skein recursion, and the sl(n) state sum that it specialises to.

Skein convention::

    a * P(L-) - a^-1 * P(L+) = z * P(L0),    P(unknot) = 1

so the k-component unlink is ``delta^(k-1)`` with ``delta = (a - a^-1)/z``, and
positive braids have positive a-degrees.  Substituting ``a = q^n``,
``z = q - q^-1`` and multiplying by ``[n]`` gives the sl(n) polynomial computed
by the resolution state sum.

The recursion switches crossings toward a descending diagram.  Arcs are
relabelled canonically by walking each component from its smallest arc, so
the walk order is the label order and a crossing is "descending" when its
over strand is reached first.  Switching never changes that labelling, which
makes each switch strictly reduce the number of non-descending crossings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagram import BraidWord, Crossing, LinkDiagram, braid_to_diagram, seifert_stats
from .errors import ResourceCapError
from .moy import DEFAULT_MAX_DIM, moy
from .polynomial import LaurentPoly1, LaurentPoly2, q, qint
from .resolution import DEFAULT_MAX_CROSSINGS, grading_shift, resolve_all

__all__ = [
    "DELTA",
    "homfly",
    "switch_crossing",
    "smooth_crossing",
    "MfwReport",
    "mfw_degrees",
    "sln_state_sum",
    "sln_from_homfly",
    "sln_vs_homfly_check",
    "SlnCheck",
    "freeze_conventions",
    "STATE_SUM_SIGN",
    "SPECIALIZATION",
]

DEFAULT_MAX_SKEIN_CROSSINGS = 16

_A = LaurentPoly2.monomial(1, 0)
_A_INV = LaurentPoly2.monomial(-1, 0)
_Z = LaurentPoly2.monomial(0, 1)
DELTA = LaurentPoly2({(1, -1): 1, (-1, -1): -1})

# frozen by freeze_conventions() on the trefoil and figure-eight
STATE_SUM_SIGN = "alternating"
SPECIALIZATION = "q^n"

_X = tuple[int, int, int, int, int]  # sign, in_under, out_under, in_over, out_over


def _canon(xs: tuple[_X, ...]) -> tuple[_X, ...]:
    """Relabel arcs by component walks; order crossings by their first in-arc."""
    nxt = {}
    for _, iu, ou, io, oo in xs:
        nxt[iu] = ou
        nxt[io] = oo
    label: dict[int, int] = {}
    for start in sorted(nxt):
        if start in label:
            continue
        arc = start
        while arc not in label:
            label[arc] = len(label)
            arc = nxt[arc]
    out = [(s, label[iu], label[ou], label[io], label[oo]) for s, iu, ou, io, oo in xs]
    out.sort(key=lambda x: min(x[1], x[3]))
    return tuple(out)


def _components(xs: tuple[_X, ...]) -> int:
    nxt = {}
    for _, iu, ou, io, oo in xs:
        nxt[iu] = ou
        nxt[io] = oo
    seen: set[int] = set()
    k = 0
    for start in nxt:
        if start in seen:
            continue
        k += 1
        arc = start
        while arc not in seen:
            seen.add(arc)
            arc = nxt[arc]
    return k


def _smooth(xs: tuple[_X, ...], i: int) -> tuple[tuple[_X, ...], set[int]]:
    """Oriented smoothing of crossing i; returns the rest and the arcs of freed loops."""
    _, iu, ou, io, oo = xs[i]
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for u, v in ((oo, iu), (ou, io)):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    rest = tuple(
        (s, find(a), find(b), find(c), find(d)) for j, (s, a, b, c, d) in enumerate(xs) if j != i
    )
    used = {arc for x in rest for arc in x[1:]}
    freed = {find(arc) for arc in (iu, ou, io, oo)} - used
    return rest, freed


@lru_cache(maxsize=None)
def _homfly_core(xs: tuple[_X, ...]) -> LaurentPoly2:
    """HOMFLY of a canonical, loop-free, non-empty crossing list."""
    bad = None
    for i, (_, iu, _, io, _) in enumerate(xs):
        if iu < io:  # reached first as an undercrossing
            bad = i
            break
    if bad is None:
        return DELTA ** (_components(xs) - 1)
    sign = xs[bad][0]
    s, iu, ou, io, oo = xs[bad]
    switched = xs[:bad] + ((-s, io, oo, iu, ou),) + xs[bad + 1 :]
    p_switched = _homfly_core(_canon(switched))
    rest, freed = _smooth(xs, bad)
    p_smoothed = _homfly_of(rest, len(freed))
    if sign > 0:
        return _A * _A * p_switched - _A * _Z * p_smoothed
    return _A_INV * _A_INV * p_switched + _A_INV * _Z * p_smoothed


def _homfly_of(xs: tuple[_X, ...], loops: int) -> LaurentPoly2:
    if not xs:
        if not loops:
            raise ValueError("the empty diagram has no HOMFLY polynomial")
        return DELTA ** (loops - 1)
    return DELTA**loops * _homfly_core(_canon(xs))


def _as_diagram(d) -> LinkDiagram:
    return braid_to_diagram(d) if isinstance(d, BraidWord) else d


def _tuples(d: LinkDiagram) -> tuple[_X, ...]:
    return tuple((x.sign, *x.arcs) for x in d.crossings)


def homfly(d, max_crossings: int = DEFAULT_MAX_SKEIN_CROSSINGS) -> LaurentPoly2:
    """HOMFLY polynomial of an oriented diagram (or of a braid closure)."""
    d = _as_diagram(d)
    if len(d.crossings) > max_crossings:
        raise ResourceCapError(
            f"{len(d.crossings)} crossings exceed the skein cap of {max_crossings}"
        )
    return _homfly_of(_tuples(d), len(d.loops))


def switch_crossing(d: LinkDiagram, i: int) -> LinkDiagram:
    xs = list(d.crossings)
    xs[i] = xs[i].switched()
    return LinkDiagram(tuple(xs), d.loops)


def smooth_crossing(d: LinkDiagram, i: int) -> LinkDiagram:
    rest, freed = _smooth(_tuples(d), i)
    return LinkDiagram(tuple(Crossing(*x) for x in rest), d.loops + tuple(sorted(freed)))


@dataclass(frozen=True)
class MfwReport:
    min_a: int | None
    max_a: int | None
    w_minus_O: int
    w_plus_O: int
    holds: bool
    min_a_unnormalized: int | None
    max_a_unnormalized: int | None
    holds_unnormalized: bool

    @property
    def sharp(self) -> bool:
        """Both endpoints attained by the unnormalised polynomial ``delta * P``."""
        return (self.min_a_unnormalized, self.max_a_unnormalized) == (self.w_minus_O, self.w_plus_O)

    def to_json(self) -> dict:
        return {
            "min_a": self.min_a,
            "max_a": self.max_a,
            "w_minus_O": self.w_minus_O,
            "w_plus_O": self.w_plus_O,
            "holds": self.holds,
            "unnormalized": {
                "min_a": self.min_a_unnormalized,
                "max_a": self.max_a_unnormalized,
                "holds": self.holds_unnormalized,
                "sharp": self.sharp,
            },
        }


def _chain(lo: int, rng, hi: int) -> bool:
    return rng is not None and lo <= rng[0] <= rng[1] <= hi


def mfw_degrees(d, max_crossings: int = DEFAULT_MAX_SKEIN_CROSSINGS) -> MfwReport:
    """a-degree range of the HOMFLY polynomial against ``[w - O, w + O]``.

    Reported both for ``P`` (unknot = 1) and for ``delta * P`` (unknot = delta);
    the latter is the normalisation matching the sl(n) polynomials, for which
    the endpoints are attained on positive torus braids.
    """
    d = _as_diagram(d)
    st = seifert_stats(d)
    p = homfly(d, max_crossings)
    rng = p.a_range()
    rng_u = (DELTA * p).a_range()
    lo, hi = st.w - st.O, st.w + st.O
    return MfwReport(
        min_a=None if rng is None else rng[0],
        max_a=None if rng is None else rng[1],
        w_minus_O=lo,
        w_plus_O=hi,
        holds=_chain(lo, rng, hi),
        min_a_unnormalized=None if rng_u is None else rng_u[0],
        max_a_unnormalized=None if rng_u is None else rng_u[1],
        holds_unnormalized=_chain(lo, rng_u, hi),
    )


def _state_sign(e_plus: int, e_minus: int, convention: str) -> int:
    if convention == "alternating":
        return -1 if (e_plus + e_minus) % 2 else 1
    if convention == "positive":
        return 1
    raise ValueError(f"unknown state-sum sign convention {convention!r}")


def state_sum_terms(
    b: BraidWord,
    n: int,
    sign: str | None = None,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    max_dim: int = DEFAULT_MAX_DIM,
):
    """Yield ``(resolution, shift, signed summand)`` for every resolution of ``b``."""
    sign = sign or STATE_SUM_SIGN
    w = b.writhe
    for res in resolve_all(b, max_crossings):
        shift = grading_shift(res.e_plus, res.e_minus, w, n)
        value = moy(res.graph, n, max_dim).shift(shift) * _state_sign(res.e_plus, res.e_minus, sign)
        yield res, shift, value


def sln_state_sum(
    b: BraidWord,
    n: int,
    sign: str | None = None,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    max_dim: int = DEFAULT_MAX_DIM,
) -> LaurentPoly1:
    """Graded Euler characteristic of the resolution complex of the closed braid ``b``."""
    total = LaurentPoly1()
    for _, _, value in state_sum_terms(b, n, sign, max_crossings, max_dim):
        total = total + value
    return total


def sln_from_homfly(p: LaurentPoly2, n: int, specialization: str | None = None) -> LaurentPoly1:
    """``[n] * P(a = q^±n, z = q - q^-1)``."""
    specialization = specialization or SPECIALIZATION
    if specialization == "q^n":
        a_val = LaurentPoly1.monomial(n)
    elif specialization == "q^-n":
        a_val = LaurentPoly1.monomial(-n)
    else:
        raise ValueError(f"unknown specialization {specialization!r}")
    return qint(n) * p.substitute(a_val, q - q.bar())


@dataclass(frozen=True)
class SlnCheck:
    holds: bool
    lhs: LaurentPoly1
    rhs: LaurentPoly1
    n: int

    def to_json(self) -> dict:
        return {"holds": self.holds, "n": self.n, "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json()}


def sln_vs_homfly_check(
    b: BraidWord,
    n: int,
    sign: str | None = None,
    specialization: str | None = None,
    max_crossings: int = DEFAULT_MAX_SKEIN_CROSSINGS,
    max_dim: int = DEFAULT_MAX_DIM,
) -> SlnCheck:
    lhs = sln_state_sum(b, n, sign, DEFAULT_MAX_CROSSINGS, max_dim)
    rhs = sln_from_homfly(homfly(b, max_crossings), n, specialization)
    return SlnCheck(lhs == rhs, lhs, rhs, n)


FREEZE_BRAIDS = ("2: 1 1 1", "3: 1 -2 1 -2")


def freeze_conventions() -> tuple[str, str]:
    """Return the (state-sum sign, specialization) pair that passes the oracles.

    Tries the frozen defaults first, then the alternatives; raises if nothing
    matches on the trefoil and figure-eight for n = 2, 3.
    """
    from .diagram import parse_braid

    braids = [parse_braid(t) for t in FREEZE_BRAIDS]
    candidates = [(STATE_SUM_SIGN, SPECIALIZATION)] + [
        (s, sp)
        for s in ("alternating", "positive")
        for sp in ("q^n", "q^-n")
        if (s, sp) != (STATE_SUM_SIGN, SPECIALIZATION)
    ]
    for s, sp in candidates:
        if all(sln_vs_homfly_check(b, n, s, sp).holds for b in braids for n in (2, 3)):
            return s, sp
    raise AssertionError("no state-sum sign / specialization pair matches the HOMFLY oracle")
