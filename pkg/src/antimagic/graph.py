"""Core representation of (k,2)-bipartite biregular graphs.

Vertices live in two disjoint 0-based index spaces: the degree-k side ``X``
and the degree-2 side ``Y``.  Edges are stored as ``(x, y)`` pairs and
referenced everywhere else by their position in :attr:`BiregularGraph.edges`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import AntimagicError, ValidationFailed

X = "X"
Y = "Y"


class VertexRef(NamedTuple):
    side: str
    index: int

    def __str__(self) -> str:
        return f"{self.side.lower()}{self.index}"


def xv(i: int) -> VertexRef:
    return VertexRef(X, i)


def yv(j: int) -> VertexRef:
    return VertexRef(Y, j)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[tuple[str, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {code for code, _ in self.violations}


def validate(k: int, x_count: int, y_count: int,
             edges: Iterable[Sequence[int]]) -> ValidationReport:
    """Check raw graph data against the (k,2)-biregular invariants."""
    edges = [tuple(e) for e in edges]
    violations: list[tuple[str, str]] = []
    if k < 3:
        violations.append(("K_TOO_SMALL", f"k={k} but k >= 3 is required"))
    if k * x_count != 2 * y_count or len(edges) != 2 * y_count:
        violations.append((
            "COUNT_MISMATCH",
            f"k*xCount={k * x_count}, 2*yCount={2 * y_count}, edges={len(edges)}",
        ))
    seen: set[tuple[int, int]] = set()
    deg_x = [0] * max(x_count, 0)
    deg_y = [0] * max(y_count, 0)
    for x, y in edges:
        if not (0 <= x < x_count and 0 <= y < y_count):
            violations.append(("COUNT_MISMATCH", f"edge ({x}, {y}) out of range"))
            continue
        if (x, y) in seen:
            violations.append(("DUP_EDGE", f"edge ({x}, {y}) repeated"))
        seen.add((x, y))
        deg_x[x] += 1
        deg_y[y] += 1
    for x, d in enumerate(deg_x):
        if d != k:
            violations.append(("BAD_DEGREE_X", f"x{x} has degree {d}, expected {k}"))
    for y, d in enumerate(deg_y):
        if d != 2:
            violations.append(("BAD_DEGREE_Y", f"y{y} has degree {d}, expected 2"))
    return ValidationReport(tuple(violations))


@dataclass(frozen=True)
class BiregularGraph:
    """Immutable simple bipartite graph, X-side degree k, Y-side degree 2.

    Construction validates; an invalid edge set raises :class:`ValidationFailed`.
    """

    k: int
    x_count: int
    y_count: int
    edges: tuple[tuple[int, int], ...]
    x_adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    y_adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = tuple((int(x), int(y)) for x, y in self.edges)
        object.__setattr__(self, "edges", edges)
        report = validate(self.k, self.x_count, self.y_count, edges)
        if not report.ok:
            raise ValidationFailed(report)
        x_adj: list[list[int]] = [[] for _ in range(self.x_count)]
        y_adj: list[list[int]] = [[] for _ in range(self.y_count)]
        for e, (x, y) in enumerate(edges):
            x_adj[x].append(e)
            y_adj[y].append(e)
        object.__setattr__(self, "x_adj", tuple(map(tuple, x_adj)))
        object.__setattr__(self, "y_adj", tuple(map(tuple, y_adj)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def n(self) -> int:
        return self.x_count + self.y_count

    def vertices(self) -> Iterator[VertexRef]:
        for i in range(self.x_count):
            yield VertexRef(X, i)
        for j in range(self.y_count):
            yield VertexRef(Y, j)

    def incident(self, v: VertexRef) -> tuple[int, ...]:
        return self.x_adj[v.index] if v.side == X else self.y_adj[v.index]

    def degree(self, v: VertexRef) -> int:
        return self.k if v.side == X else 2

    def endpoints(self, e: int) -> tuple[VertexRef, VertexRef]:
        x, y = self.edges[e]
        return VertexRef(X, x), VertexRef(Y, y)

    def other(self, e: int, v: VertexRef) -> VertexRef:
        x, y = self.edges[e]
        return VertexRef(Y, y) if v.side == X else VertexRef(X, x)

    def neighbors(self, v: VertexRef) -> list[VertexRef]:
        return [self.other(e, v) for e in self.incident(v)]

    def edge_between(self, a: VertexRef, b: VertexRef) -> int:
        for e in self.incident(a):
            if self.other(e, a) == b:
                return e
        raise KeyError(f"no edge between {a} and {b}")

    def canonical(self) -> "BiregularGraph":
        """Same graph with edges sorted by (x, y)."""
        return BiregularGraph(self.k, self.x_count, self.y_count, tuple(sorted(self.edges)))


def connected_components(g: BiregularGraph) -> list[frozenset[VertexRef]]:
    """Vertex sets of the components, smallest first, ties by smallest x-id."""
    seen: set[VertexRef] = set()
    comps = []
    for start in (VertexRef(X, i) for i in range(g.x_count)):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    # every y has two x-neighbours, so scanning X covers all vertices
    comps.sort(key=lambda c: (len(c), min(v.index for v in c if v.side == X)))
    return comps


def is_connected(g: BiregularGraph) -> bool:
    return len(connected_components(g)) == 1


def is_complete_k2(g: BiregularGraph) -> bool:
    if not is_connected(g):
        raise AntimagicError("NOT_CONNECTED", "is_complete_k2 expects a connected graph")
    return g.x_count == 2


@dataclass(frozen=True)
class Subgraph:
    """An induced component with order-preserving local ids.

    ``x_ids[i]`` / ``y_ids[j]`` / ``edge_ids[e]`` map local ids back to the
    parent graph.
    """

    graph: BiregularGraph
    x_ids: tuple[int, ...]
    y_ids: tuple[int, ...]
    edge_ids: tuple[int, ...]

    def to_parent(self, v: VertexRef) -> VertexRef:
        ids = self.x_ids if v.side == X else self.y_ids
        return VertexRef(v.side, ids[v.index])


def induced_subgraph(g: BiregularGraph, vertices: Iterable[VertexRef]) -> Subgraph:
    vs = set(vertices)
    x_ids = sorted(v.index for v in vs if v.side == X)
    y_ids = sorted(v.index for v in vs if v.side == Y)
    x_local = {x: i for i, x in enumerate(x_ids)}
    y_local = {y: j for j, y in enumerate(y_ids)}
    edge_ids = []
    edges = []
    for e, (x, y) in enumerate(g.edges):
        if x in x_local and y in y_local:
            edge_ids.append(e)
            edges.append((x_local[x], y_local[y]))
    sub = BiregularGraph(g.k, len(x_ids), len(y_ids), tuple(edges))
    return Subgraph(sub, tuple(x_ids), tuple(y_ids), tuple(edge_ids))


def disjoint_union(graphs: Sequence[BiregularGraph]) -> BiregularGraph:
    if not graphs:
        raise AntimagicError("EMPTY_UNION", "need at least one graph")
    k = graphs[0].k
    edges = []
    dx = dy = 0
    for h in graphs:
        if h.k != k:
            raise AntimagicError("K_MISMATCH", f"components have k={k} and k={h.k}")
        edges.extend((x + dx, y + dy) for x, y in h.edges)
        dx += h.x_count
        dy += h.y_count
    return BiregularGraph(k, dx, dy, tuple(edges))
