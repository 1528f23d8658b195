"""Two-colour labelings of resolved graphs and the splitting they induce.

A labeling puts 1 or 2 on every regular edge so that each wide edge has the
same multiset of labels on its two entering edges as on its two exiting ones.
Given a labeling, each wide edge is treated by one of three local rules:

* all four labels equal ``a``: the wide edge survives into the label-``a`` graph;
* labels ``a`` and ``3-a`` on the two sides, unchanged from bottom to top: the
  wide edge dissolves into two independent strands and contributes a local
  interaction of +1 (label 2 on the left) or -1 (label 1 on the left);
* labels swap sides: the two strands cross transversally, belonging to
  neither subgraph.

Left is the lower strand position of the wide edge, strands pointing upward.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceCapError
from .resolution import Edge, ResolvedGraph, Slice, circle_count

__all__ = [
    "Labeling",
    "SplitPair",
    "enumerate_labelings",
    "local_interaction",
    "total_interaction",
    "split",
    "rotation_number",
    "sigma",
    "constant_labeling",
]

DEFAULT_MAX_SEGMENTS = 64

KEEP, PARALLEL, SWAP = "keep", "parallel", "swap"


@dataclass(frozen=True)
class Labeling:
    segment_labels: tuple[tuple[Edge, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "_map", dict(self.segment_labels))

    def __getitem__(self, edge: Edge) -> int:
        return self._map[edge]

    def swapped(self) -> Labeling:
        return Labeling(tuple((e, 3 - lab) for e, lab in self.segment_labels))

    def to_json(self) -> list:
        return [[[s, j], lab] for (s, j), lab in self.segment_labels]

    @classmethod
    def from_mapping(cls, g: ResolvedGraph, labels: dict[Edge, int]) -> Labeling:
        return cls(tuple((e, labels[e]) for e in g.edges))


def constant_labeling(g: ResolvedGraph, label: int) -> Labeling:
    return Labeling(tuple((e, label) for e in g.edges))


def is_labeling(g: ResolvedGraph, f: Labeling) -> bool:
    for k in range(g.e):
        il, ir, ol, orr = g.wide_edge_ends(k)
        if sorted((f[il], f[ir])) != sorted((f[ol], f[orr])):
            return False
    return True


def enumerate_labelings(g: ResolvedGraph, max_segments: int = DEFAULT_MAX_SEGMENTS) -> list[Labeling]:
    """Every labeling of ``g``, by backtracking with forced-value propagation."""
    edges = g.edges
    if len(edges) > max_segments:
        raise ResourceCapError(f"{len(edges)} segments exceed the labeling cap of {max_segments}")
    quads = [g.wide_edge_ends(k) for k in range(g.e)]
    touching: dict[Edge, list[int]] = {e: [] for e in edges}
    for k, quad in enumerate(quads):
        for e in set(quad):
            touching[e].append(k)

    out: list[Labeling] = []

    def propagate(assign: dict[Edge, int], changed: list[Edge]) -> bool:
        stack = list(changed)
        while stack:
            e = stack.pop()
            for k in touching[e]:
                il, ir, ol, orr = quads[k]
                ins = [assign.get(il), assign.get(ir)]
                outs = [assign.get(ol), assign.get(orr)]
                free = {x for x in (il, ir, ol, orr) if x not in assign}
                if not free:
                    if sorted(ins) != sorted(outs):
                        return False
                    continue
                if len(free) != 1:
                    continue
                (x,) = free
                options = []
                for lab in (1, 2):
                    assign[x] = lab
                    if sorted((assign[il], assign[ir])) == sorted((assign[ol], assign[orr])):
                        options.append(lab)
                    del assign[x]
                if not options:
                    return False
                if len(options) == 1:
                    assign[x] = options[0]
                    stack.append(x)
        return True

    def rec(i: int, assign: dict[Edge, int]):
        while i < len(edges) and edges[i] in assign:
            i += 1
        if i == len(edges):
            out.append(Labeling(tuple((e, assign[e]) for e in edges)))
            return
        for lab in (1, 2):
            trial = dict(assign)
            trial[edges[i]] = lab
            if propagate(trial, [edges[i]]):
                rec(i + 1, trial)

    rec(0, {})
    return out


def _ends(g: ResolvedGraph, f: Labeling, k: int) -> tuple[int, int, int, int]:
    il, ir, ol, orr = g.wide_edge_ends(k)
    return f[il], f[ir], f[ol], f[orr]


def local_interaction(g: ResolvedGraph, f: Labeling, k: int) -> int:
    """Weight of the k-th wide edge: +1 for (2,1)->(2,1), -1 for (1,2)->(1,2), else 0."""
    il, ir, ol, orr = _ends(g, f, k)
    if (il, ir) == (2, 1) and (ol, orr) == (2, 1):
        return 1
    if (il, ir) == (1, 2) and (ol, orr) == (1, 2):
        return -1
    return 0


def total_interaction(g: ResolvedGraph, f: Labeling) -> int:
    return sum(local_interaction(g, f, k) for k in range(g.e))


def rotation_number(g: ResolvedGraph) -> int:
    """Total rotation number after removing wide edges.

    Strands of a resolved braid all run upward and close up counterclockwise,
    so each traced circle winds +1.
    """
    return circle_count(g) if g.strands else 0


@dataclass(frozen=True)
class SplitPair:
    graph1: ResolvedGraph
    graph2: ResolvedGraph
    interaction: int
    r1: int
    r2: int
    crossings_between: int
    rules: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "graph1": self.graph1.to_json(),
            "graph2": self.graph2.to_json(),
            "interaction": self.interaction,
            "r1": self.r1,
            "r2": self.r2,
            "crossings_between": self.crossings_between,
        }


def split(g: ResolvedGraph, f: Labeling) -> SplitPair:
    """Split ``g`` into its label-1 and label-2 graphs.

    Each subgraph is re-indexed onto its own strands: the label-``a`` strands
    keep their left-to-right order at every level, so a transversal swap with
    the other colour does not move them relative to each other.
    """
    strands = g.strands
    count = {1: 0, 2: 0}
    for s in range(1, strands + 1):
        count[f[g.edge_at_level(s, 0)]] += 1
    sub_slices: dict[int, list[Slice]] = {1: [], 2: []}
    rules = []
    interaction = 0
    crossings = 0
    for k, sl in enumerate(g.wide):
        il, ir, ol, orr = _ends(g, f, k)
        if il == ir:
            lab = il
            below = sum(
                1 for s in range(1, sl.pos) if f[g.edge_at_level(s, k)] == lab
            )
            sub_slices[lab].append(Slice("wide", below + 1, sl.origin))
            rules.append(KEEP)
        elif (il, ir) == (ol, orr):
            interaction += 1 if il == 2 else -1
            rules.append(PARALLEL)
        else:
            crossings += 1
            rules.append(SWAP)
    graph1 = ResolvedGraph(count[1], tuple(sub_slices[1]))
    graph2 = ResolvedGraph(count[2], tuple(sub_slices[2]))
    return SplitPair(
        graph1=graph1,
        graph2=graph2,
        interaction=interaction,
        r1=rotation_number(graph1),
        r2=rotation_number(graph2),
        crossings_between=crossings,
        rules=tuple(rules),
    )


def sigma(g: ResolvedGraph, f: Labeling, m: int, n: int) -> int:
    """Grading shift ``<g|f> + m*r(g_1) - n*r(g_2)`` of the labeling's summand."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    sp = split(g, f)
    return sp.interaction + m * sp.r1 - n * sp.r2
