"""Braid words, oriented link diagrams and their Seifert statistics.

Two input grammars are supported.

Braid words::

    <strands> ':' <signed-int>*        e.g. "3: 1 -2 1 -2"

Letter ``g`` is the generator sigma_|g| (or its inverse when ``g < 0``) and the
sign of the letter is the sign of the crossing.

Diagrams, one record per line::

    X <+|-> <in_under> <out_under> <in_over> <out_over>
    O <arc>

``X`` lines are crossings with explicit signs.  ``O`` lines declare a
crossing-free closed component.  Arc identifiers are non-negative integers.
Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import InputError

__all__ = [
    "BraidWord",
    "Crossing",
    "LinkDiagram",
    "SeifertStats",
    "parse_braid",
    "parse_diagram",
    "parse_link",
    "braid_to_diagram",
    "seifert_stats",
    "component_count",
    "seifert_circles",
]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        if self.strands < 1:
            raise InputError(f"a braid needs at least one strand, got {self.strands}")
        for i, g in enumerate(self.letters):
            if g == 0 or abs(g) > self.strands - 1:
                raise InputError(
                    f"generator {g} out of range for {self.strands} strands "
                    f"(need 1 <= |g| <= {self.strands - 1})",
                    position=i,
                )

    @property
    def writhe(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)

    @property
    def c_plus(self) -> int:
        return sum(1 for g in self.letters if g > 0)

    @property
    def c_minus(self) -> int:
        return sum(1 for g in self.letters if g < 0)

    def mirror(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-g for g in self.letters))

    def permutation(self) -> list[int]:
        """Where the strand starting at position i (0-based) ends up."""
        where = list(range(self.strands))  # where[start] = current position
        at = list(range(self.strands))  # at[position] = start
        for g in self.letters:
            p = abs(g) - 1
            s1, s2 = at[p], at[p + 1]
            at[p], at[p + 1] = s2, s1
            where[s1], where[s2] = p + 1, p
        return where

    def __str__(self) -> str:
        if not self.letters:
            return f"{self.strands}:"
        return f"{self.strands}: " + " ".join(str(g) for g in self.letters)


_INT = re.compile(r"[+-]?\d+")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"<strands>: <letters>"``; errors carry a character position."""
    colon = text.find(":")
    if colon < 0:
        raise InputError("braid word must look like '<strands>: <letters>'", position=len(text))
    head = text[:colon].strip()
    if not head.isdigit():
        raise InputError(f"bad strand count {head!r}", position=0)
    strands = int(head)
    if strands < 1:
        raise InputError("strand count must be positive", position=0)
    letters = []
    for m in re.finditer(r"\S+", text[colon + 1 :]):
        tok = m.group()
        pos = colon + 1 + m.start()
        if not _INT.fullmatch(tok):
            raise InputError(f"bad braid letter {tok!r}", position=pos)
        g = int(tok)
        if g == 0 or abs(g) > strands - 1:
            raise InputError(
                f"generator {g} out of range for {strands} strands (|g| <= {strands - 1})",
                position=pos,
            )
        letters.append(g)
    return BraidWord(strands, tuple(letters))


@dataclass(frozen=True)
class Crossing:
    """An oriented crossing: the under strand runs ``in_under -> out_under``."""

    sign: int
    in_under: int
    out_under: int
    in_over: int
    out_over: int

    @property
    def arcs(self) -> tuple[int, int, int, int]:
        return self.in_under, self.out_under, self.in_over, self.out_over

    def switched(self) -> Crossing:
        return Crossing(-self.sign, self.in_over, self.out_over, self.in_under, self.out_under)

    def line(self) -> str:
        s = "+" if self.sign > 0 else "-"
        return f"X {s} {self.in_under} {self.out_under} {self.in_over} {self.out_over}"


@dataclass(frozen=True)
class LinkDiagram:
    """Oriented diagram as a signed crossing list plus crossing-free loops.

    Each arc runs from the crossing where it is an ``out_*`` to the crossing
    where it is an ``in_*``.  Arcs that no crossing mentions are closed loops.
    """

    crossings: tuple[Crossing, ...] = ()
    loops: tuple[int, ...] = ()
    _heads: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "loops", tuple(self.loops))
        ins: dict[int, int] = {}
        outs: dict[int, int] = {}
        for i, x in enumerate(self.crossings):
            if x.sign not in (1, -1):
                raise InputError(f"crossing {i} has sign {x.sign}")
            for arc in (x.in_under, x.in_over):
                if arc in ins:
                    raise InputError(f"arc {arc} enters two crossings", position=i)
                ins[arc] = i
            for arc in (x.out_under, x.out_over):
                if arc in outs:
                    raise InputError(f"arc {arc} leaves two crossings", position=i)
                outs[arc] = i
        if set(ins) != set(outs):
            bad = sorted(set(ins) ^ set(outs))
            raise InputError(f"inconsistent orientation: arcs {bad} lack a head or a tail")
        if len(set(self.loops)) != len(self.loops) or set(self.loops) & set(ins):
            raise InputError("loop arcs must be distinct and unused by crossings")
        object.__setattr__(self, "_heads", ins)

    @property
    def arcs(self) -> frozenset[int]:
        return frozenset(self._heads) | frozenset(self.loops)

    @property
    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def to_text(self) -> str:
        lines = [x.line() for x in self.crossings] + [f"O {arc}" for arc in self.loops]
        return "\n".join(lines) + ("\n" if lines else "")

    def _successor(self, seifert: bool) -> dict[int, int]:
        """Arc -> next arc along the link (or along the Seifert smoothing)."""
        nxt = {}
        for x in self.crossings:
            if seifert:
                nxt[x.in_under] = x.out_over
                nxt[x.in_over] = x.out_under
            else:
                nxt[x.in_under] = x.out_under
                nxt[x.in_over] = x.out_over
        return nxt

    def cycles(self, seifert: bool = False) -> list[list[int]]:
        """Arc cycles of the link components (or of the Seifert circles)."""
        nxt = self._successor(seifert)
        seen: set[int] = set()
        out = [[arc] for arc in self.loops]
        for start in sorted(nxt):
            if start in seen:
                continue
            cyc = []
            arc = start
            while arc not in seen:
                seen.add(arc)
                cyc.append(arc)
                arc = nxt[arc]
            out.append(cyc)
        return out


def parse_diagram(text: str) -> LinkDiagram:
    crossings = []
    loops = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        kind = toks[0].upper()
        if kind == "X":
            if len(toks) != 6 or toks[1] not in ("+", "-"):
                raise InputError(
                    f"line {lineno}: expected 'X <+|-> <in_under> <out_under> <in_over> <out_over>'",
                    position=lineno,
                )
            try:
                arcs = [int(t) for t in toks[2:]]
            except ValueError:
                raise InputError(f"line {lineno}: arc identifiers must be integers", position=lineno)
            crossings.append(Crossing(1 if toks[1] == "+" else -1, *arcs))
        elif kind == "O":
            if len(toks) != 2 or not toks[1].lstrip("-").isdigit():
                raise InputError(f"line {lineno}: expected 'O <arc>'", position=lineno)
            loops.append(int(toks[1]))
        else:
            raise InputError(f"line {lineno}: unknown record {toks[0]!r}", position=lineno)
    if not crossings and not loops:
        raise InputError("empty diagram")
    return LinkDiagram(tuple(crossings), tuple(loops))


def parse_link(text: str) -> BraidWord | LinkDiagram:
    """Dispatch on the grammar: braid words contain ':', diagrams do not."""
    stripped = text.strip()
    if ":" in stripped.split("\n", 1)[0]:
        return parse_braid(stripped)
    return parse_diagram(text)


def braid_to_diagram(b: BraidWord) -> LinkDiagram:
    """Closed-braid diagram with strands running upward.

    For a positive letter the strand entering on the left (lower position)
    passes over; for a negative letter the one entering on the right does.
    """
    next_arc = 0
    current = []
    first = []
    for _ in range(b.strands):
        current.append(next_arc)
        first.append(next_arc)
        next_arc += 1
    raw: list[list[int]] = []
    signs = []
    touched = [False] * b.strands
    for g in b.letters:
        p = abs(g) - 1
        left_in, right_in = current[p], current[p + 1]
        left_out, right_out = next_arc, next_arc + 1
        next_arc += 2
        # the strand entering on the left leaves at position p+1 on right_out
        if g > 0:
            rec = [right_in, left_out, left_in, right_out]  # under runs right->left
        else:
            rec = [left_in, right_out, right_in, left_out]  # under runs left->right
        raw.append(rec)
        signs.append(1 if g > 0 else -1)
        current[p], current[p + 1] = left_out, right_out
        touched[p] = touched[p + 1] = True
    # close each position: the last arc at position i is the first arc at i
    rename = {}
    for i in range(b.strands):
        if touched[i]:
            rename[current[i]] = first[i]
    crossings = tuple(
        Crossing(s, *(rename.get(arc, arc) for arc in rec)) for s, rec in zip(signs, raw)
    )
    loops = tuple(first[i] for i in range(b.strands) if not touched[i])
    return _compact(LinkDiagram(crossings, loops))


def _compact(d: LinkDiagram) -> LinkDiagram:
    """Renumber arcs 0..k-1 in order of first appearance."""
    order: dict[int, int] = {}
    for x in d.crossings:
        for arc in x.arcs:
            order.setdefault(arc, len(order))
    for arc in d.loops:
        order.setdefault(arc, len(order))
    return LinkDiagram(
        tuple(Crossing(x.sign, *(order[arc] for arc in x.arcs)) for x in d.crossings),
        tuple(order[arc] for arc in d.loops),
    )


@dataclass(frozen=True)
class SeifertStats:
    w: int
    O: int
    c_plus: int
    c_minus: int
    O_gt: int
    O_lt: int
    components: int

    @property
    def O_geq(self) -> int:
        return self.O - self.O_lt

    @property
    def O_leq(self) -> int:
        return self.O - self.O_gt

    def to_json(self) -> dict:
        return {
            "w": self.w,
            "O": self.O,
            "c_plus": self.c_plus,
            "c_minus": self.c_minus,
            "O_gt": self.O_gt,
            "O_lt": self.O_lt,
            "O_geq": self.O_geq,
            "O_leq": self.O_leq,
            "components": self.components,
        }


def _as_diagram(d: LinkDiagram | BraidWord) -> LinkDiagram:
    return braid_to_diagram(d) if isinstance(d, BraidWord) else d


def seifert_circles(d: LinkDiagram | BraidWord) -> list[list[int]]:
    return _as_diagram(d).cycles(seifert=True)


def component_count(d: LinkDiagram | BraidWord) -> int:
    return len(_as_diagram(d).cycles(seifert=False))


def seifert_stats(d: LinkDiagram | BraidWord) -> SeifertStats:
    """Run the Seifert algorithm and collect every diagram statistic.

    A circle counts toward ``O_gt`` (``O_lt``) when it meets at least one
    crossing and every crossing it meets is positive (negative).
    """
    d = _as_diagram(d)
    circles = d.cycles(seifert=True)
    circle_of = {arc: i for i, cyc in enumerate(circles) for arc in cyc}
    signs_at: list[set[int]] = [set() for _ in circles]
    for x in d.crossings:
        for arc in x.arcs:
            signs_at[circle_of[arc]].add(x.sign)
    o_gt = sum(1 for s in signs_at if s == {1})
    o_lt = sum(1 for s in signs_at if s == {-1})
    c_plus = sum(1 for x in d.crossings if x.sign > 0)
    c_minus = len(d.crossings) - c_plus
    return SeifertStats(
        w=c_plus - c_minus,
        O=len(circles),
        c_plus=c_plus,
        c_minus=c_minus,
        O_gt=o_gt,
        O_lt=o_lt,
        components=component_count(d),
    )
