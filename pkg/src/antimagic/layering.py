"""Rooted distance layering, vertex types and the per-layer edge subsets F_i.

Terminology used throughout the labellers:

* ``levels[d]`` is the set of vertices at BFS distance ``d`` from the root.
  Even levels hold X vertices, odd levels hold Y vertices.
* Layer ``i`` (1-based, ``1 <= i <= p``) is the set of edges incident to
  level ``2i-1``.  Layers get contiguous label intervals, deepest layer first.
* An *up edge* of layer ``i`` joins levels ``2i-2`` and ``2i-1``; a *down
  edge* joins levels ``2i-1`` and ``2i``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import AntimagicError
from .graph import X, BiregularGraph, VertexRef


@dataclass(frozen=True)
class Layering:
    graph: BiregularGraph
    root: VertexRef
    levels: tuple[tuple[VertexRef, ...], ...]
    layers: tuple[tuple[int, ...], ...]
    intervals: tuple[tuple[int, int], ...]
    level_of: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def depth(self) -> int:
        """Largest distance from the root (``l``)."""
        return len(self.levels) - 1

    @property
    def p(self) -> int:
        return len(self.layers)

    def level(self, d: int) -> tuple[VertexRef, ...]:
        return self.levels[d] if 0 <= d < len(self.levels) else ()

    def layer(self, i: int) -> tuple[int, ...]:
        return self.layers[i - 1]

    def interval(self, i: int) -> tuple[int, int]:
        return self.intervals[i - 1]

    def pred_edges(self, v: VertexRef) -> list[int]:
        g, d = self.graph, self.level_of[v]
        return [e for e in g.incident(v) if self.level_of[g.other(e, v)] == d - 1]

    def succ_edges(self, v: VertexRef) -> list[int]:
        g, d = self.graph, self.level_of[v]
        return [e for e in g.incident(v) if self.level_of[g.other(e, v)] == d + 1]


def build_layering(g: BiregularGraph, root: VertexRef | None = None) -> Layering:
    if root is None:
        root = VertexRef(X, 0)
    if root.side != X or not 0 <= root.index < g.x_count:
        raise AntimagicError("ROOT_NOT_DEGREE_K", f"root {root} is not an X vertex of the graph")
    dist = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for e in g.incident(v):
            w = g.other(e, v)
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    if len(dist) != g.n:
        raise AntimagicError("NOT_CONNECTED", f"{g.n - len(dist)} vertices unreachable from {root}")
    depth = max(dist.values())
    buckets: list[list[VertexRef]] = [[] for _ in range(depth + 1)]
    for v, d in dist.items():
        buckets[d].append(v)
    levels = tuple(tuple(sorted(b)) for b in buckets)

    p = (depth - 1) // 2 + 1
    layers = tuple(
        tuple(sorted(e for y in levels[2 * i - 1] for e in g.incident(y)))
        for i in range(1, p + 1)
    )
    intervals: list[tuple[int, int]] = [(0, 0)] * p
    nxt = 1
    for i in range(p, 0, -1):
        size = 2 * len(levels[2 * i - 1])
        intervals[i - 1] = (nxt, nxt + size - 1)
        nxt += size
    return Layering(g, root, levels, layers, tuple(intervals), dist)


@dataclass(frozen=True)
class TypeTable:
    even_type: dict[VertexRef, int]
    odd_type: dict[VertexRef, int]
    counts: dict[tuple[int, int], int]

    def t(self, i: int, j: int) -> int:
        """Number of type-j vertices on level 2i."""
        return self.counts.get((i, j), 0)

    def type_of(self, v: VertexRef) -> int:
        return self.even_type[v] if v.side == X else self.odd_type[v]


def classify_types(lay: Layering) -> TypeTable:
    even: dict[VertexRef, int] = {}
    odd: dict[VertexRef, int] = {}
    counts: dict[tuple[int, int], int] = {}
    for d, level in enumerate(lay.levels):
        for v in level:
            if d == 0:
                continue
            preds = len(lay.pred_edges(v))
            if d % 2 == 0:
                even[v] = preds
                counts[(d // 2, preds)] = counts.get((d // 2, preds), 0) + 1
            else:
                odd[v] = preds
    return TypeTable(even, odd, counts)


class FPair(NamedTuple):
    """Two F-edges sharing the degree-2 vertex ``mid``."""

    mid: VertexRef      # level 2i-1
    up: int             # edge top-mid
    down: int           # edge mid-bottom
    top: VertexRef      # level 2i-2
    bottom: VertexRef   # level 2i


@dataclass(frozen=True)
class FPins:
    must_include: frozenset[int] = frozenset()
    must_exclude: frozenset[int] = frozenset()


@dataclass(frozen=True)
class FSet:
    layer_index: int
    edges: frozenset[int]
    excluded: dict[VertexRef, int]
    pairs: tuple[FPair, ...]

    def pair_at(self, mid: VertexRef) -> FPair:
        for pr in self.pairs:
            if pr.mid == mid:
                return pr
        raise KeyError(mid)


def _pair_through(lay: Layering, mid: VertexRef) -> FPair:
    (up,) = lay.pred_edges(mid)
    (down,) = lay.succ_edges(mid)
    g = lay.graph
    return FPair(mid, up, down, g.other(up, mid), g.other(down, mid))


def build_F(lay: Layering, types: TypeTable, i: int, pins: FPins | None = None) -> FSet:
    """Edges labelled in the first step of layer ``i``.

    Each level-2i vertex keeps exactly one down edge out of F; by default the
    one whose degree-2 endpoint has the smallest id.  Every included down edge
    brings the up edge through the same degree-2 vertex.
    """
    pins = pins or FPins()
    g = lay.graph
    down_of = {}  # down edge -> mid vertex, for layer i
    for mid in lay.level(2 * i - 1):
        for e in lay.succ_edges(mid):
            down_of[e] = mid
    up_to_down = {}
    for e, mid in down_of.items():
        (up,) = lay.pred_edges(mid)
        up_to_down[up] = e

    forced_in: set[int] = set()
    for e in pins.must_include:
        if e in down_of:
            forced_in.add(e)
        elif e in up_to_down:
            forced_in.add(up_to_down[e])
        else:
            raise AntimagicError("PIN_CONFLICT", f"edge {e} cannot be in F_{i}")
    excluded_pins: dict[VertexRef, int] = {}
    for e in pins.must_exclude:
        if e not in down_of:
            raise AntimagicError("PIN_CONFLICT", f"edge {e} is not a down edge of layer {i}")
        w = g.other(e, down_of[e])
        if w in excluded_pins:
            raise AntimagicError("PIN_CONFLICT", f"two exclusions pinned at {w}")
        excluded_pins[w] = e
    if forced_in & set(excluded_pins.values()):
        raise AntimagicError("PIN_CONFLICT", "an edge is pinned both in and out of F")

    excluded: dict[VertexRef, int] = {}
    included: list[int] = []
    for w in lay.level(2 * i):
        downs = lay.pred_edges(w)
        if w in excluded_pins:
            out = excluded_pins[w]
        else:
            free = [e for e in downs if e not in forced_in]
            if not free:
                raise AntimagicError("PIN_CONFLICT", f"every down edge at {w} pinned into F")
            out = min(free, key=lambda e: g.other(e, w).index)
        excluded[w] = out
        included.extend(e for e in downs if e != out)

    pairs = tuple(sorted((_pair_through(lay, down_of[e]) for e in included), key=lambda pr: pr.mid))
    edges = frozenset(e for pr in pairs for e in (pr.up, pr.down))
    return FSet(i, edges, excluded, pairs)
