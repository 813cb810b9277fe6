"""Constructive labelling of connected (k,2)-biregular graphs, k odd.

Layers are labelled deepest first.  In each layer:

1. the edge subset F is labelled by walking alternating paths, taking the two
   largest free labels on every move towards the root and the two smallest on
   every move away from it;
2. every level-2i vertex gets its last edge, in increasing order of partial
   sum, with the orientation chosen so that its final sum is even;
3. the remaining degree-2 vertices (both neighbours closer to the root) get
   consecutive pairs.

The driver works on an arbitrary sorted *pool* of labels rather than on
1..m, so the same code labels a component inside a block of a larger graph
or regenerates one after a repair swap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, NamedTuple, Sequence

from .errors import AntimagicError, InternalInvariantError
from .generators import gen_kk2
from .graph import X, BiregularGraph, VertexRef, is_connected
from .labelling import Labelling
from .layering import (FPair, FPins, FSet, Layering, TypeTable, build_F,
                       build_layering, classify_types)


class LayerCursor:
    """Free labels of one layer, consumed from both ends during the first step.

    ``labels`` is the sorted slice of the pool reserved for the layer; the
    first ``f_size`` of them belong to F.
    """

    def __init__(self, labels: Sequence[int], f_size: int, layer: int):
        if f_size > len(labels) or f_size % 2:
            raise InternalInvariantError(f"|F|={f_size} does not fit layer of {len(labels)} labels")
        self.labels = list(labels)
        self.f_size = f_size
        self.layer = layer
        self._lo = 0
        self._hi = f_size - 1
        self.step1_done = self.step2_done = self.step3_done = False

    @property
    def low(self) -> int | None:
        return self.labels[self._lo] if self._lo < len(self.labels) else None

    @property
    def high(self) -> int | None:
        return self.labels[self._hi] if self._hi >= 0 else None

    @property
    def m_i(self) -> int:
        return self.labels[0]

    @property
    def M_i(self) -> int:
        return self.labels[self.f_size - 1]

    def take_low(self) -> int:
        if self._lo >= len(self.labels) or (not self.step1_done and self._lo > self._hi):
            raise InternalInvariantError(f"layer {self.layer}: out of small labels")
        label = self.labels[self._lo]
        self._lo += 1
        return label

    def take_high(self) -> int:
        if self._hi < self._lo:
            raise InternalInvariantError(f"layer {self.layer}: out of large labels")
        label = self.labels[self._hi]
        self._hi -= 1
        return label

    def finish_step1(self) -> None:
        if self._lo != self._hi + 1:
            raise InternalInvariantError(
                f"layer {self.layer}: F labels not exhausted (low idx {self._lo}, high idx {self._hi})")
        self._lo = self.f_size
        self.step1_done = True

    @property
    def remaining(self) -> int:
        return len(self.labels) - self._lo


class StartOverride(NamedTuple):
    """First upward pair and first downward pair of the F walk, by mid vertex."""

    up_mid: VertexRef
    down_mid: VertexRef


@dataclass
class LayerRecord:
    index: int
    labels: tuple[int, ...]
    f_set: FSet
    m_i: int | None
    M_i: int | None
    step1_sigma: dict[VertexRef, int] = field(default_factory=dict)
    case: str | None = None
    t_k: int = 0


@dataclass
class LabelTrace:
    """Optional instrumentation filled in by the labellers."""

    root: VertexRef | None = None
    layering: Layering | None = None
    types: TypeTable | None = None
    complete: bool = False
    layers: list[LayerRecord] = field(default_factory=list)

    def record(self, i: int) -> LayerRecord:
        for rec in self.layers:
            if rec.index == i:
                return rec
        raise KeyError(i)


Step1 = Callable[..., None]


def step1_label_F(lay: Layering, types: TypeTable, F: FSet, lab: Labelling,
                  cursor: LayerCursor, start_override: StartOverride | None = None) -> None:
    """Greedy alternating-path labelling of F (k odd)."""
    if not F.pairs:
        cursor.finish_step1()
        return
    pending: dict[VertexRef, FPair] = {pr.mid: pr for pr in F.pairs}
    at_top: dict[VertexRef, list[FPair]] = {}
    at_bottom: dict[VertexRef, list[FPair]] = {}
    for pr in F.pairs:  # pairs are sorted by mid id
        at_top.setdefault(pr.top, []).append(pr)
        at_bottom.setdefault(pr.bottom, []).append(pr)
    tops = sorted(at_top)
    bottoms = sorted(at_bottom)
    scan = {"top": 0, "bottom": 0}

    def open_pair(index: dict[VertexRef, list[FPair]], v: VertexRef) -> FPair | None:
        for pr in index.get(v, ()):
            if pr.mid in pending:
                return pr
        return None

    def restart(kind: str) -> FPair:
        order, index = (tops, at_top) if kind == "top" else (bottoms, at_bottom)
        while scan[kind] < len(order):
            pr = open_pair(index, order[scan[kind]])
            if pr is not None:
                return pr
            scan[kind] += 1
        raise InternalInvariantError(f"layer {cursor.layer}: no {kind} vertex with an open F pair")

    def take(mid: VertexRef) -> FPair:
        if mid not in pending:
            raise AntimagicError("PIN_CONFLICT", f"override pair at {mid} is not an open F pair")
        return pending.pop(mid)

    def move_up(pr: FPair) -> VertexRef:
        lab.assign(pr.up, cursor.take_high())
        lab.assign(pr.down, cursor.take_high())
        return pr.bottom

    def move_down(pr: FPair) -> VertexRef:
        lab.assign(pr.down, cursor.take_low())
        lab.assign(pr.up, cursor.take_low())
        return pr.top

    if start_override is not None:
        first = take(start_override.up_mid)
        forced_down = start_override.down_mid
    else:
        first = pending.pop(restart("top").mid)
        forced_down = None
    current = move_up(first)
    going_up = True
    while pending:
        if going_up:
            if forced_down is not None:
                pr = take(forced_down)
                forced_down = None
            else:
                pr = open_pair(at_bottom, current) or restart("bottom")
                del pending[pr.mid]
            current = move_down(pr)
        else:
            pr = open_pair(at_top, current) or restart("top")
            del pending[pr.mid]
            current = move_up(pr)
        going_up = not going_up
    cursor.finish_step1()


def _partner(lay: Layering, lab: Labelling, e: int, mid: VertexRef) -> int:
    (other,) = [f for f in lay.graph.incident(mid) if f != e]
    return other


def step2_sorted_pairs(lay: Layering, types: TypeTable, lab: Labelling, cursor: LayerCursor) -> None:
    """Give every level-2i vertex its last edge, making its sum even."""
    i = cursor.layer
    level = lay.level(2 * i)
    order = sorted(level, key=lambda u: (lab.sigma(u), u.index))
    for u in order:
        rest = lab.unlabelled_at(u)
        if len(rest) != 1:
            raise InternalInvariantError(f"{u} has {len(rest)} unlabelled edges entering step 2")
        e = rest[0]
        mid = lay.graph.other(e, u)
        partner = _partner(lay, lab, e, mid)
        if lab.is_labelled(partner) or types.odd_type.get(mid) != 1:
            raise InternalInvariantError(f"last edge of {u} does not lead to a fresh type-1 vertex")
        alpha = cursor.take_low()
        beta = cursor.take_low()
        if lab.sigma(u) % 2:
            lab.assign(e, alpha)
            lab.assign(partner, beta)
        else:
            lab.assign(e, beta)
            lab.assign(partner, alpha)
    cursor.step2_done = True


def step3_type2_pairs(lay: Layering, types: TypeTable, lab: Labelling, cursor: LayerCursor) -> None:
    """Consecutive pairs on degree-2 vertices whose neighbours are both closer to the root."""
    g = lay.graph
    for v in lay.level(2 * cursor.layer - 1):
        if types.odd_type[v] != 2:
            continue
        edges = sorted(g.incident(v), key=lambda e: g.edges[e][0])
        if all(lab.is_labelled(e) for e in edges):
            continue  # pinned
        for e in edges:
            lab.assign(e, cursor.take_low())
    if cursor.remaining:
        raise InternalInvariantError(f"layer {cursor.layer}: {cursor.remaining} labels left over")
    cursor.step3_done = True


def complete_labelling(g: BiregularGraph, root: VertexRef, pool: Sequence[int],
                    flips: Sequence[int] = ()) -> Labelling:
    """Explicit labelling of K_{k,2} from the consecutive pairs of ``pool``.

    With Y sorted by id as v_1..v_k, the root gets the larger label of pair i
    on edge r v_i and the other X vertex the smaller one.  Indices listed in
    ``flips`` (1-based) swap the two labels of their pair.
    """
    if g.x_count != 2:
        raise AntimagicError("NOT_COMPLETE", "closed-form labelling needs K_{k,2}")
    if len(pool) != g.m:
        raise AntimagicError("POOL_SIZE_MISMATCH", f"pool has {len(pool)} labels for {g.m} edges")
    pool = sorted(pool)
    lab = Labelling(g)
    other = VertexRef(X, 1 - root.index)
    for i in range(1, g.k + 1):
        v = VertexRef("Y", i - 1)
        small, large = pool[2 * i - 2], pool[2 * i - 1]
        if i in flips:
            small, large = large, small
        lab.assign(g.edge_between(root, v), large)
        lab.assign(g.edge_between(other, v), small)
    return lab


def label_kk2(k: int, shift: int = 0) -> Labelling:
    """Closed-form labelling of K_{k,2} (root x0) using labels shift+1 .. shift+2k."""
    if shift < 0:
        raise AntimagicError("BAD_SHIFT", f"shift={shift}")
    g = gen_kk2(k)
    return complete_labelling(g, VertexRef(X, 0), range(shift + 1, shift + 2 * k + 1))


def _check_pins(lay: Layering, types: TypeTable, pinned: Mapping[int, int]) -> None:
    g = lay.graph
    for e in pinned:
        _, y = g.endpoints(e)
        if types.odd_type.get(y) != 2 or any(f not in pinned for f in g.incident(y)):
            raise AntimagicError(
                "PIN_CONFLICT", f"pinned edge {e} must be one of the two edges of a pinned type-2 vertex")


def label_layers(g: BiregularGraph, root: VertexRef, pool: Sequence[int], step1: Step1, *,
                 pinned: Mapping[int, int] | None = None,
                 f_pins: Mapping[int, FPins] | None = None,
                 start_overrides: Mapping[int, StartOverride] | None = None,
                 trace: LabelTrace | None = None,
                 on_layer: Callable[[LayerRecord], None] | None = None) -> Labelling:
    """Run the three steps on every layer, deepest first, drawing from ``pool``."""
    lay = build_layering(g, root)
    types = classify_types(lay)
    pinned = dict(pinned or {})
    f_pins = f_pins or {}
    start_overrides = start_overrides or {}
    pool = sorted(pool)
    if len(pool) + len(pinned) != g.m:
        raise AntimagicError("POOL_SIZE_MISMATCH",
                             f"{len(pool)} pool labels + {len(pinned)} pins for {g.m} edges")
    if set(pool) & set(pinned.values()) or len(set(pool)) != len(pool):
        raise AntimagicError("PIN_CONFLICT", "pool and pinned labels overlap or repeat")
    _check_pins(lay, types, pinned)

    lab = Labelling(g)
    for e, label in pinned.items():
        lab.assign(e, label)
    if trace is not None:
        trace.root, trace.layering, trace.types = root, lay, types

    pos = 0
    for i in range(lay.p, 0, -1):
        free = sum(1 for e in lay.layer(i) if not lab.is_labelled(e))
        labels = pool[pos:pos + free]
        pos += free
        F = build_F(lay, types, i, f_pins.get(i))
        if F.edges & pinned.keys():
            raise AntimagicError("PIN_CONFLICT", f"pinned edge inside F_{i}")
        cursor = LayerCursor(labels, len(F.edges), i)
        rec = LayerRecord(i, tuple(labels), F,
                          cursor.m_i if F.edges else None, cursor.M_i if F.edges else None,
                          t_k=types.t(i, g.k))
        step1(lay, types, F, lab, cursor, start_overrides.get(i), rec)
        rec.step1_sigma = {w: lab.sigma(w) for w in lay.level(2 * i)}
        if on_layer is not None:
            on_layer(rec)
        step2_sorted_pairs(lay, types, lab, cursor)
        step3_type2_pairs(lay, types, lab, cursor)
        if trace is not None:
            trace.layers.append(rec)
    if not lab.is_total:
        raise InternalInvariantError("edges left unlabelled after the last layer")
    return lab


def _odd_step1(lay, types, F, lab, cursor, override, rec):
    step1_label_F(lay, types, F, lab, cursor, override)


def resolve_root(g: BiregularGraph, root: VertexRef | None) -> VertexRef:
    if root is None:
        return VertexRef(X, 0)
    if root.side != X or not 0 <= root.index < g.x_count:
        raise AntimagicError("ROOT_NOT_DEGREE_K", f"root {root} is not an X vertex of the graph")
    return root


def check_connected(g: BiregularGraph) -> None:
    if g.k < 3:
        raise AntimagicError("K_TOO_SMALL", f"k={g.k}")
    if not is_connected(g):
        raise AntimagicError("NOT_CONNECTED", "graph has several components")


def label_connected_odd(g: BiregularGraph, root: VertexRef | None = None, *,
                        trace: LabelTrace | None = None, shift: int = 0) -> Labelling:
    check_connected(g)
    if g.k % 2 == 0:
        raise AntimagicError("K_EVEN", f"k={g.k} is even; use label_connected_even")
    root = resolve_root(g, root)
    pool = range(shift + 1, shift + g.m + 1)
    if g.x_count == 2:
        if trace is not None:
            trace.root, trace.complete = root, True
        return complete_labelling(g, root, pool)
    return label_layers(g, root, pool, _odd_step1, trace=trace)
