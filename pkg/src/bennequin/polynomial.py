"""Exact Laurent polynomials with integer coefficients.

``LaurentPoly1`` lives in ``Z[q, q^-1]`` and carries every graded dimension in
the package.  ``LaurentPoly2`` lives in ``Z[a^±1, z^±1]`` and carries HOMFLY
polynomials.  Both are immutable and hashable; the zero polynomial is the empty
mapping.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import Any

__all__ = [
    "LaurentPoly1",
    "LaurentPoly2",
    "qint",
    "shift",
    "support",
    "adeg_range",
    "q",
    "a",
    "z",
]


class _Laurent:
    """Sparse exponent -> coefficient map; subclasses define the key algebra."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients: Mapping[Any, int] | Iterable[tuple[Any, int]] = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        c: dict[Any, int] = {}
        for k, v in items:
            if not isinstance(v, int):
                raise TypeError(f"coefficients must be integers, got {type(v).__name__}")
            k = self._check_key(k)
            c[k] = c.get(k, 0) + v
        self._c = {k: v for k, v in c.items() if v}
        self._hash = None

    @classmethod
    def _from_clean(cls, c: dict):
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @staticmethod
    def _check_key(k):
        raise NotImplementedError

    @staticmethod
    def _key_add(k1, k2):
        raise NotImplementedError

    @property
    def coefficients(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self).constant(other)
        return None

    @classmethod
    def constant(cls, c: int):
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._c.items())))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return self._from_clean(c)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c: dict = {}
        add = self._key_add
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = add(k1, k2)
                c[k] = c.get(k, 0) + v1 * v2
        return self._from_clean({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = type(self).constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


class LaurentPoly1(_Laurent):
    """Laurent polynomial in ``q`` with integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _check_key(k):
        if not isinstance(k, int):
            k = int(k)
        return k

    @staticmethod
    def _key_add(k1, k2):
        return k1 + k2

    @classmethod
    def constant(cls, c: int) -> LaurentPoly1:
        return cls._from_clean({0: c} if c else {})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly1:
        return cls._from_clean({exponent: coefficient} if coefficient else {})

    def shift(self, k: int) -> LaurentPoly1:
        """Multiply by ``q**k``."""
        if not k:
            return self
        return self._from_clean({e + k: v for e, v in self._c.items()})

    def support(self) -> tuple[int, int] | None:
        if not self._c:
            return None
        return min(self._c), max(self._c)

    def bar(self) -> LaurentPoly1:
        """The involution ``q -> q^-1``."""
        return self._from_clean({-e: v for e, v in self._c.items()})

    def coefficient(self, e: int) -> int:
        return self._c.get(e, 0)

    def divide_exact(self, divisor: LaurentPoly1) -> LaurentPoly1:
        """Exact division; raises ``ArithmeticError`` if a remainder is left."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lo_d, hi_d = divisor.support()
        lead = divisor._c[hi_d]
        rem = dict(self._c)
        quot: dict[int, int] = {}
        while rem:
            hi = max(rem)
            if hi - hi_d < min(rem) - lo_d:
                raise ArithmeticError("division leaves a remainder")
            c, r = divmod(rem[hi], lead)
            if r:
                raise ArithmeticError("division leaves a remainder")
            e = hi - hi_d
            quot[e] = c
            for de, dv in divisor._c.items():
                k = de + e
                s = rem.get(k, 0) - c * dv
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return self._from_clean(quot)

    def to_json(self) -> dict:
        return {"q": {str(e): v for e, v in sorted(self._c.items())}}

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentPoly1:
        return cls((int(e), int(v)) for e, v in data["q"].items())

    def __str__(self) -> str:
        if not self._c:
            return "0"
        return " ".join(f"{v:+d}*q^{e}" for e, v in sorted(self._c.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly1({str(self)!r})"


class LaurentPoly2(_Laurent):
    """Laurent polynomial in ``a`` and ``z``; keys are ``(a_exp, z_exp)``."""

    __slots__ = ()

    @staticmethod
    def _check_key(k):
        ea, ez = k
        return int(ea), int(ez)

    @staticmethod
    def _key_add(k1, k2):
        return k1[0] + k2[0], k1[1] + k2[1]

    @classmethod
    def constant(cls, c: int) -> LaurentPoly2:
        return cls._from_clean({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, a_exp: int, z_exp: int, coefficient: int = 1) -> LaurentPoly2:
        return cls._from_clean({(a_exp, z_exp): coefficient} if coefficient else {})

    def a_range(self) -> tuple[int, int] | None:
        if not self._c:
            return None
        exps = [ea for ea, _ in self._c]
        return min(exps), max(exps)

    def z_range(self) -> tuple[int, int] | None:
        if not self._c:
            return None
        exps = [ez for _, ez in self._c]
        return min(exps), max(exps)

    def substitute(self, a_value: LaurentPoly1, z_value: LaurentPoly1) -> LaurentPoly1:
        """Evaluate into ``Z[q^±1]``.

        ``a_value`` must be a monomial (so negative powers exist); negative powers
        of ``z`` are cleared by exact division at the end.
        """
        if len(a_value) != 1:
            raise ValueError("a must specialise to a monomial")
        ((a_exp, a_coef),) = a_value.items()
        if a_coef not in (1, -1):
            raise ValueError("a must specialise to a unit monomial")
        if not self._c:
            return LaurentPoly1()
        zmin = min(0, self.z_range()[0])
        total = LaurentPoly1()
        zpows: dict[int, LaurentPoly1] = {}
        for (ea, ez), v in self._c.items():
            k = ez - zmin
            if k not in zpows:
                zpows[k] = z_value**k
            sign = a_coef**ea if ea >= 0 else a_coef ** (-ea)
            total = total + zpows[k].shift(a_exp * ea) * (sign * v)
        if zmin:
            total = total.divide_exact(z_value ** (-zmin))
        return total

    def mirror(self) -> LaurentPoly2:
        """Apply ``a -> -a^-1``."""
        return self._from_clean({(-ea, ez): (-v if ea % 2 else v) for (ea, ez), v in self._c.items()})

    def to_json(self) -> dict:
        return {"az": {f"{ea},{ez}": v for (ea, ez), v in sorted(self._c.items())}}

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentPoly2:
        out = []
        for key, v in data["az"].items():
            ea, ez = key.split(",")
            out.append(((int(ea), int(ez)), int(v)))
        return cls(out)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        return " ".join(f"{v:+d}*a^{ea}*z^{ez}" for (ea, ez), v in sorted(self._c.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly2({str(self)!r})"


q = LaurentPoly1.monomial(1)
a = LaurentPoly2.monomial(1, 0)
z = LaurentPoly2.monomial(0, 1)


def qint(n: int) -> LaurentPoly1:
    """Balanced quantum integer ``[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)``."""
    if n < 0:
        raise ValueError("quantum integers are defined here for n >= 0")
    return LaurentPoly1._from_clean({n - 1 - 2 * i: 1 for i in range(n)})


def shift(p: LaurentPoly1, k: int) -> LaurentPoly1:
    return p.shift(k)


def support(p: LaurentPoly1) -> tuple[int, int] | None:
    """``(min_deg, max_deg)``, or ``None`` for the zero polynomial."""
    return p.support()


def adeg_range(p: LaurentPoly2) -> tuple[int, int] | None:
    """Extreme exponents of ``a``, or ``None`` for the zero polynomial."""
    return p.a_range()
