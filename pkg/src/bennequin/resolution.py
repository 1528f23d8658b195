"""Resolutions of closed braids into braid-like graphs with wide edges.

A ``ResolvedGraph`` is a stack of horizontal slices on ``strands`` upward
strands, closed up so the top of strand i meets the bottom of strand i.  A
``wide`` slice at position p joins strands p and p+1 by a wide edge; an ``id``
slice is the oriented smoothing of a crossing and changes nothing.

Regular edges are indexed per strand: on a strand met by t wide edges, edge
``(s, j)`` leaves the j-th of them and enters the next one (cyclically, through
the closure).  A strand met by no wide edge is a single closed edge ``(s, 0)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .diagram import BraidWord
from .errors import InputError, ResourceCapError

__all__ = [
    "Slice",
    "ResolvedGraph",
    "Resolution",
    "resolve_all",
    "oriented_resolution",
    "grading_shift",
    "circle_count",
    "named_graph",
    "parse_graph",
    "all_graphs",
    "NAMED_GRAPHS",
]

DEFAULT_MAX_CROSSINGS = 20


@dataclass(frozen=True)
class Slice:
    kind: str  # "id" or "wide"
    pos: int
    origin: str = "x"  # "+", "-" (resolved crossing sign) or "x" (intrinsic)

    def __post_init__(self):
        if self.kind not in ("id", "wide"):
            raise InputError(f"unknown slice kind {self.kind!r}")
        if self.origin not in ("+", "-", "x"):
            raise InputError(f"unknown slice origin {self.origin!r}")

    def to_json(self) -> dict:
        return {"pos": self.pos, "kind": self.kind, "origin": self.origin}


Edge = tuple[int, int]


@dataclass(frozen=True)
class ResolvedGraph:
    strands: int
    slices: tuple[Slice, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(self.slices))
        if self.strands < 0:
            raise InputError("strand count must be non-negative")
        for s in self.slices:
            if not 1 <= s.pos <= self.strands - 1:
                raise InputError(f"slice position {s.pos} out of range for {self.strands} strands")

    @classmethod
    def from_positions(cls, strands: int, positions, origin: str = "x") -> ResolvedGraph:
        return cls(strands, tuple(Slice("wide", p, origin) for p in positions))

    @cached_property
    def wide(self) -> tuple[Slice, ...]:
        return tuple(s for s in self.slices if s.kind == "wide")

    @property
    def e(self) -> int:
        return len(self.wide)

    @property
    def e_plus(self) -> int:
        return sum(1 for s in self.wide if s.origin == "+")

    @property
    def e_minus(self) -> int:
        return sum(1 for s in self.wide if s.origin == "-")

    @property
    def wide_positions(self) -> tuple[int, ...]:
        return tuple(s.pos for s in self.wide)

    def stripped(self) -> ResolvedGraph:
        """Same graph without identity slices or origin tags (cache key for evaluation)."""
        return ResolvedGraph.from_positions(self.strands, self.wide_positions)

    @cached_property
    def _touch(self) -> list[list[int]]:
        """For each strand (0-based), indices into ``wide`` of the wide edges it meets."""
        touch: list[list[int]] = [[] for _ in range(self.strands)]
        for k, s in enumerate(self.wide):
            touch[s.pos - 1].append(k)
            touch[s.pos].append(k)
        return touch

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """All regular edges, as ``(strand, j)`` with 1-based strands."""
        out = []
        for s, ks in enumerate(self._touch, start=1):
            out.extend((s, j) for j in range(max(1, len(ks))))
        return tuple(out)

    @cached_property
    def _edge_ends(self) -> tuple[tuple[Edge, Edge, Edge, Edge], ...]:
        ends = []
        for k, sl in enumerate(self.wide):
            quad = []
            for strand in (sl.pos, sl.pos + 1):
                ks = self._touch[strand - 1]
                j = ks.index(k)
                quad.append(((strand, (j - 1) % len(ks)), (strand, j)))
            (in_l, out_l), (in_r, out_r) = quad
            ends.append((in_l, in_r, out_l, out_r))
        return tuple(ends)

    def wide_edge_ends(self, k: int) -> tuple[Edge, Edge, Edge, Edge]:
        """``(in_left, in_right, out_left, out_right)`` of the k-th wide edge."""
        return self._edge_ends[k]

    def edge_at_level(self, strand: int, level: int) -> Edge:
        """The regular edge on ``strand`` just below wide edge ``level`` (or above the last)."""
        ks = self._touch[strand - 1]
        if not ks:
            return (strand, 0)
        before = sum(1 for k in ks if k < level)
        return (strand, (before - 1) % len(ks))

    def to_json(self) -> dict:
        return {"strands": self.strands, "slices": [s.to_json() for s in self.slices]}

    @classmethod
    def from_json(cls, data: dict) -> ResolvedGraph:
        return cls(
            int(data["strands"]),
            tuple(Slice(s["kind"], int(s["pos"]), s.get("origin", "x")) for s in data["slices"]),
        )

    def __str__(self) -> str:
        return f"graph {self.strands}: " + " ".join(str(p) for p in self.wide_positions)


def circle_count(g: ResolvedGraph) -> int:
    """Number of circles left after removing every wide edge by two turnbacks.

    Traced explicitly: each removed wide edge glues its left entering edge to
    its left exiting edge, and likewise on the right.
    """
    parent = {e: e for e in g.edges}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in range(g.e):
        in_l, in_r, out_l, out_r = g.wide_edge_ends(k)
        for u, v in ((in_l, out_l), (in_r, out_r)):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    return len({find(e) for e in g.edges})


@dataclass(frozen=True)
class Resolution:
    graph: ResolvedGraph
    e_plus: int
    e_minus: int

    @property
    def hom_degree(self) -> int:
        return self.e_plus - self.e_minus

    def to_json(self) -> dict:
        d = self.graph.to_json()
        d["e_plus"] = self.e_plus
        d["e_minus"] = self.e_minus
        d["hom_degree"] = self.hom_degree
        return d


def _resolve(b: BraidWord, mask: int) -> Resolution:
    slices = []
    for i, g in enumerate(b.letters):
        origin = "+" if g > 0 else "-"
        kind = "wide" if mask >> i & 1 else "id"
        slices.append(Slice(kind, abs(g), origin))
    graph = ResolvedGraph(b.strands, tuple(slices))
    return Resolution(graph, graph.e_plus, graph.e_minus)


def resolve_all(b: BraidWord, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> list[Resolution]:
    """All 2^c resolutions; bit i of the enumeration counter makes letter i wide."""
    c = len(b.letters)
    if c > max_crossings:
        raise ResourceCapError(f"{c} crossings exceed the resolution cap of {max_crossings}")
    return [_resolve(b, mask) for mask in range(1 << c)]


def oriented_resolution(b: BraidWord) -> ResolvedGraph:
    return _resolve(b, 0).graph


def grading_shift(e_plus: int, e_minus: int, w: int, n: int) -> int:
    """Quantum shift ``(n-1)w + e_+ - e_-`` of a resolution in the sl(n) state sum."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return (n - 1) * w + e_plus - e_minus


NAMED_GRAPHS = {
    "empty": ResolvedGraph(0),
    "circle": ResolvedGraph(1),
    "theta": ResolvedGraph.from_positions(2, [1]),
    "theta2": ResolvedGraph.from_positions(2, [1, 1]),
}


def named_graph(name: str) -> ResolvedGraph:
    try:
        return NAMED_GRAPHS[name]
    except KeyError:
        raise InputError(f"unknown graph {name!r}; known: {', '.join(NAMED_GRAPHS)}")


_GRAPH = re.compile(r"\s*graph\s+(\d+)\s*:((?:\s*\d+)*)\s*$")


def parse_graph(text: str) -> ResolvedGraph:
    """A named graph, or ``graph <strands>: <p1> <p2> ...`` listing wide positions bottom-up."""
    text = text.strip()
    if text in NAMED_GRAPHS:
        return NAMED_GRAPHS[text]
    m = _GRAPH.fullmatch(text)
    if not m:
        raise InputError(f"expected a graph name or 'graph <strands>: <positions>', got {text!r}")
    return ResolvedGraph.from_positions(int(m.group(1)), [int(p) for p in m.group(2).split()])


def all_graphs(max_strands: int, max_wide: int):
    """Every graph with 1..max_strands strands and up to max_wide wide edges."""
    from itertools import product

    for strands in range(1, max_strands + 1):
        for e in range(max_wide + 1):
            if e and strands < 2:
                break
            for pos in product(range(1, strands), repeat=e):
                yield ResolvedGraph.from_positions(strands, pos)
