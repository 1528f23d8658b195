"""Graded dimensions of resolved graphs by a transfer-matrix quantum trace.

The sl(n) evaluation works on ``V^{⊗O}`` where ``V`` has basis ``b_1..b_n`` in
quantum degrees ``n+1-2i``.  A wide edge at position p acts on tensor factors
p, p+1 by the operator W: it kills ``b_i ⊗ b_i`` and on each block
``{b_i ⊗ b_j, b_j ⊗ b_i}`` (i < j) is the [2]-scaled rank-one projector

    b_j ⊗ b_i  (larger letter on the left)  ->  q * itself  - other
    b_i ⊗ b_j  (smaller letter on the left) ->  q^-1 * itself - other

The closed graph evaluates to the quantum trace of the slice product, weighting
each basis word by ``q`` to the sum of its letter degrees.  A circle gives
``[n]``, the theta graph ``[n][n-1]``, and the empty graph 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import NamedTuple

from .errors import ResourceCapError
from .labeling import enumerate_labelings, split
from .polynomial import LaurentPoly1, qint

__all__ = [
    "WideConvention",
    "DEFAULT_CONVENTION",
    "wide_block",
    "moy",
    "verify_composition",
    "support_check",
    "CompositionReport",
    "SupportReport",
]

DEFAULT_MAX_DIM = 4096


class WideConvention(NamedTuple):
    offdiag: int = -1  # off-diagonal entry of each 2x2 block
    high_left: int = 1  # q-exponent on the diagonal when the larger letter is on the left


DEFAULT_CONVENTION = WideConvention()


def wide_block(convention: WideConvention = DEFAULT_CONVENTION) -> list[list[LaurentPoly1]]:
    """The 2x2 block of W on ``(b_j ⊗ b_i, b_i ⊗ b_j)`` with ``i < j``."""
    off = LaurentPoly1.constant(convention.offdiag)
    return [
        [LaurentPoly1.monomial(convention.high_left), off],
        [off, LaurentPoly1.monomial(-convention.high_left)],
    ]


def _matmul(x, y):
    return [
        [x[r][0] * y[0][c] + x[r][1] * y[1][c] for c in range(2)] for r in range(2)
    ]


def _check_hecke(convention: WideConvention) -> None:
    w = wide_block(convention)
    w2 = _matmul(w, w)
    two = qint(2)
    if any(w2[r][c] != two * w[r][c] for r in range(2) for c in range(2)):
        raise AssertionError(f"wide-edge operator fails W^2 = [2]W under {convention}")


_check_hecke(DEFAULT_CONVENTION)


def _padd(acc: dict[int, int], poly: dict[int, int], shift: int, factor: int) -> None:
    for e, v in poly.items():
        k = e + shift
        s = acc.get(k, 0) + v * factor
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


@lru_cache(maxsize=8192)
def _moy_cached(strands: int, positions: tuple[int, ...], n: int, convention: WideConvention) -> LaurentPoly1:
    if strands == 0:
        return LaurentPoly1.constant(1)
    if n == 1:
        return LaurentPoly1.constant(0 if positions else 1)
    hi, off = convention.high_left, convention.offdiag
    total: dict[int, int] = {}
    for start in product(range(1, n + 1), repeat=strands):
        vec: dict[tuple[int, ...], dict[int, int]] = {start: {0: 1}}
        for p in positions:
            new: dict[tuple[int, ...], dict[int, int]] = {}
            for word, poly in vec.items():
                i, j = word[p - 1], word[p]
                if i == j:
                    continue
                diag_shift = hi if i > j else -hi
                _padd(new.setdefault(word, {}), poly, diag_shift, 1)
                other = word[: p - 1] + (j, i) + word[p + 1 :]
                _padd(new.setdefault(other, {}), poly, 0, off)
            vec = {w: c for w, c in new.items() if c}
            if not vec:
                break
        diag = vec.get(start)
        if diag:
            weight = sum(n + 1 - 2 * letter for letter in start)
            _padd(total, diag, weight, 1)
    return LaurentPoly1(total)


def moy(g, n: int, max_dim: int = DEFAULT_MAX_DIM, convention: WideConvention = DEFAULT_CONVENTION) -> LaurentPoly1:
    """Graded dimension of the sl(n) cohomology of the resolved graph ``g``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > 1 and n**g.strands > max_dim:
        raise ResourceCapError(f"state space {n}^{g.strands} exceeds the cap of {max_dim}")
    return _moy_cached(g.strands, g.wide_positions, n, convention)


@dataclass(frozen=True)
class CompositionReport:
    holds: bool
    lhs: LaurentPoly1
    rhs: LaurentPoly1
    m: int
    n: int
    terms: int

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "m": self.m,
            "n": self.n,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "labelings": self.terms,
        }


def verify_composition(
    g,
    m: int,
    n: int,
    max_dim: int = DEFAULT_MAX_DIM,
    convention: WideConvention = DEFAULT_CONVENTION,
) -> CompositionReport:
    """Compare the sl(m+n) value with the sum over labelings of split products."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    lhs = moy(g, m + n, max_dim, convention)
    rhs = LaurentPoly1()
    labelings = enumerate_labelings(g)
    for f in labelings:
        sp = split(g, f)
        shift = sp.interaction + m * sp.r1 - n * sp.r2
        term = moy(sp.graph1, n, max_dim, convention) * moy(sp.graph2, m, max_dim, convention)
        rhs = rhs + term.shift(shift)
    return CompositionReport(lhs == rhs, lhs, rhs, m, n, len(labelings))


@dataclass(frozen=True)
class SupportReport:
    min_deg: int | None
    max_deg: int | None
    lower_bound: int
    upper_bound: int
    holds: bool

    def to_json(self) -> dict:
        return {
            "support": None if self.min_deg is None else [self.min_deg, self.max_deg],
            "bounds": [self.lower_bound, self.upper_bound],
            "holds": self.holds,
        }


def support_check(g, n: int, max_dim: int = DEFAULT_MAX_DIM) -> SupportReport:
    """Check that the graded dimension lives in ``[-(n-1)O - e, (n-1)O + e]``."""
    poly = moy(g, n, max_dim)
    lo, hi = -(n - 1) * g.strands - g.e, (n - 1) * g.strands + g.e
    sup = poly.support()
    if sup is None:
        return SupportReport(None, None, lo, hi, True)
    return SupportReport(sup[0], sup[1], lo, hi, lo <= sup[0] and sup[1] <= hi)
