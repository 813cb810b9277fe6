"""Disconnected graphs with odd k: block labelling plus root-conflict repair.

Components are labelled one after another with consecutive label blocks,
smallest component first.  Only a root can then share its sum with another
vertex, and only with a degree-2 one.  A conflict at component i is removed
by trading C_i's top pair (B_i - 1, B_i) for C_{i+1}'s bottom pair
(B_i + 1, B_i + 2), which raises sigma(r_i) by 2 and keeps every degree-2 sum
in place, then regenerating C_{i+1} on its new label set.

Each component keeps a sorted label pool; regeneration runs the ordinary
layer pipeline over that pool, so "the smallest free label" always means the
smallest pool entry.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .errors import AntimagicError, InternalInvariantError
from .graph import X, Y, BiregularGraph, Subgraph, VertexRef, connected_components, induced_subgraph
from .labeller_even import _even_step1, label_connected_even
from .labeller_odd import (StartOverride, _odd_step1, label_connected_odd, label_layers,
                           complete_labelling)
from .labelling import Labelling
from .layering import FPins, build_F, build_layering, classify_types
from .verify import check_antimagic


class CaseTag(str, enum.Enum):
    CASE1_DEG2 = "CASE1_DEG2"
    CASE2_DEGK = "CASE2_DEGK"
    CASE2_KK2 = "CASE2_KK2"
    CASE2_1 = "CASE2_1"
    CASE2_2 = "CASE2_2"


@dataclass
class ComponentPlan:
    """Components in labelling order with their blocks and current label pools.

    Indices are 0-based positions in ``parts``; ``blocks[i]`` is (A_i, B_i).
    """

    graph: BiregularGraph
    parts: list[Subgraph]
    roots: list[VertexRef]
    blocks: list[tuple[int, int]]
    pools: list[list[int]]

    def __len__(self) -> int:
        return len(self.parts)

    def is_kk2(self, i: int) -> bool:
        return self.parts[i].graph.x_count == 2


def plan_components(g: BiregularGraph) -> ComponentPlan:
    parts, roots, blocks, pools = [], [], [], []
    nxt = 1
    for comp in connected_components(g):
        sub = induced_subgraph(g, comp)
        parts.append(sub)
        roots.append(VertexRef(X, sub.x_ids[0]))
        blocks.append((nxt, nxt + sub.graph.m - 1))
        pools.append(list(range(nxt, nxt + sub.graph.m)))
        nxt += sub.graph.m
    return ComponentPlan(g, parts, roots, blocks, pools)


@dataclass(frozen=True)
class ConflictRecord:
    index: int
    witness: VertexRef
    case: CaseTag
    root_sum: int


@dataclass
class RepairRound:
    index: int
    case: CaseTag
    witness: VertexRef
    root_sum_before: int
    root_sum_after: int
    deg2_before: tuple[int, ...]
    deg2_after: tuple[int, ...]


@dataclass
class MultiTrace:
    plan: ComponentPlan | None = None
    initial_labels: list[int] | None = None
    flipped: list[int] = field(default_factory=list)
    rounds: list[RepairRound] = field(default_factory=list)
    cap: int = 0
    verified: bool | None = None


def _sums(g: BiregularGraph, labels: Sequence[int]) -> tuple[list[int], list[int]]:
    sx = [0] * g.x_count
    sy = [0] * g.y_count
    for (x, y), label in zip(g.edges, labels):
        sx[x] += label
        sy[y] += label
    return sx, sy


def _deg2_multiset(g, labels) -> tuple[int, ...]:
    return tuple(sorted(_sums(g, labels)[1]))


def relabel_component_with_pins(component: BiregularGraph, pool: Sequence[int],
                                pinned: dict[int, int] | None = None,
                                f_constraints: FPins | None = None,
                                start_override: StartOverride | None = None,
                                root: VertexRef | None = None,
                                flips: Sequence[int] = ()) -> Labelling:
    """Label one connected component from ``pool`` (plus pinned edges).

    ``f_constraints`` and ``start_override`` apply to the deepest layer.
    """
    root = root or VertexRef(X, 0)
    pinned = pinned or {}
    if component.x_count == 2:
        if pinned or f_constraints or start_override:
            raise AntimagicError("PIN_CONFLICT", "K_{k,2} components take no pins")
        return complete_labelling(component, root, pool, flips)
    step1 = _odd_step1 if component.k % 2 else _even_step1
    p = build_layering(component, root).p
    return label_layers(component, root, pool, step1, pinned=pinned,
                        f_pins={p: f_constraints} if f_constraints else None,
                        start_overrides={p: start_override} if start_override else None)


def _write(labels: list, part: Subgraph, lab: Labelling) -> None:
    for local, e in enumerate(part.edge_ids):
        labels[e] = lab.labels[local]


def detect_conflict(plan: ComponentPlan, labels: Sequence[int]) -> ConflictRecord | None:
    """Smallest i whose root sum equals the sum of some non-root vertex."""
    g = plan.graph
    sx, sy = _sums(g, labels)
    roots = set(plan.roots)
    by_sum: dict[int, list[VertexRef]] = {}
    for x, s in enumerate(sx):
        if VertexRef(X, x) not in roots:
            by_sum.setdefault(s, []).append(VertexRef(X, x))
    for y, s in enumerate(sy):
        by_sum.setdefault(s, []).append(VertexRef(Y, y))
    for i, r in enumerate(plan.roots):
        s = sx[r.index]
        hits = by_sum.get(s)
        if not hits:
            continue
        if any(v.side == X for v in hits) or s % 2 == 0:
            raise AntimagicError("WITNESS_MISMATCH",
                                 f"root {r} (sum {s}) collides with a degree-{g.k} vertex")
        if i == len(plan) - 1:
            raise AntimagicError("CONFLICT_IN_LAST_COMPONENT",
                                 f"root {r} of the last component has sum {s} = sigma({min(hits)})")
        if plan.is_kk2(i + 1):
            case = CaseTag.CASE2_KK2
        else:
            nxt = plan.parts[i + 1].graph
            case = CaseTag.CASE1_DEG2 if build_layering(nxt).depth % 2 else CaseTag.CASE2_DEGK
        return ConflictRecord(i, min(hits), case, s)
    return None


def _case2_plan(part: BiregularGraph):
    """Pins and walk start for the deepest layer when the deepest level is degree k.

    Returns the resolved case with its F pins and walk start, or
    ``(CASE2_DEGK, None, None)`` when no anchor vertex exists.
    """
    lay = build_layering(part)
    types = classify_types(lay)
    k, d = part.k, lay.depth
    p = lay.p

    def deep_successors(u):
        out = []
        for e in lay.succ_edges(u):
            v = part.other(e, u)
            if types.odd_type[v] != 1:
                continue
            (down,) = lay.succ_edges(v)
            w = part.other(down, v)
            if lay.level_of[w] == d:
                out.append((v, e, down, w))
        return sorted(out)

    candidates = [u for u in lay.level(d - 2) if u != lay.root]
    for u in candidates:
        if 1 < types.even_type[u] < k:
            succ = deep_successors(u)
            if succ:
                v, uv, vw, w = succ[0]
                pins = FPins(frozenset({uv, vw}))
                F = build_F(lay, types, p, pins)
                v2 = min(pr.mid for pr in F.pairs if pr.bottom == w and pr.mid != v)
                return CaseTag.CASE2_1, pins, StartOverride(v2, v)
    for u in candidates:
        if types.even_type[u] != 1:
            continue
        succ = deep_successors(u)
        if not succ:
            continue
        v1, uv1, v1w1, w1 = succ[0]
        other = [s for s in succ if s[3] != w1]
        if not other:
            continue
        v2w2 = other[0][2]
        pins = FPins(frozenset({uv1, v1w1}), frozenset({v2w2}))
        F = build_F(lay, types, p, pins)
        v3 = min(pr.mid for pr in F.pairs if pr.bottom == w1 and pr.mid != v1)
        return CaseTag.CASE2_2, pins, StartOverride(v3, v1)
    # neither anchor exists (e.g. a single deepest vertex reached only through
    # type-1 tops): regenerate with the default walk and rely on verification
    return CaseTag.CASE2_DEGK, None, None


def repair_conflict(plan: ComponentPlan, labels: list, rec: ConflictRecord) -> CaseTag:
    """Apply one swap-and-regenerate round in place; returns the case actually used."""
    g = plan.graph
    i = rec.index
    low, high = plan.pools[i], plan.pools[i + 1]
    B = plan.blocks[i][1]
    if low[-2:] != [B - 1, B] or high[:2] != [B + 1, B + 2]:
        raise InternalInvariantError(f"pools around block boundary {B} are not aligned")
    top_edges = [e for e in plan.parts[i].edge_ids if labels[e] in (B - 1, B)]
    r = plan.roots[i]
    if not any(g.edges[e][0] == r.index for e in top_edges):
        raise AntimagicError("WITNESS_MISMATCH", f"top pair of component {i} is not at its root")

    new_low = low[:-2] + [B + 1, B + 2]
    new_high = [B - 1, B] + high[2:]
    part = plan.parts[i + 1]
    sub = part.graph
    case = rec.case
    if case is CaseTag.CASE2_KK2:
        for e in part.edge_ids:
            if labels[e] in (B + 1, B + 2):
                labels[e] -= 2
    elif case is CaseTag.CASE1_DEG2:
        lay = build_layering(sub)
        w = min(lay.level(lay.depth))
        edges = sorted(sub.incident(w), key=lambda e: sub.edges[e][0])
        current = sorted(labels[part.edge_ids[e]] for e in edges)
        if current != [B + 1, B + 2]:
            raise AntimagicError("WITNESS_MISMATCH", f"deepest vertex {w} carries {current}")
        lab = relabel_component_with_pins(sub, high[2:], pinned={edges[0]: B - 1, edges[1]: B})
        _write(labels, part, lab)
    else:
        case, pins, override = _case2_plan(sub)
        lab = relabel_component_with_pins(sub, new_high, f_constraints=pins, start_override=override)
        _write(labels, part, lab)
    for e in top_edges:
        labels[e] += 2
    plan.pools[i], plan.pools[i + 1] = new_low, new_high
    return case


def _initial_labels(plan: ComponentPlan, trace: MultiTrace | None) -> list:
    g = plan.graph
    labels: list = [None] * g.m
    for part, pool in zip(plan.parts, plan.pools):
        _write(labels, part, relabel_component_with_pins(part.graph, pool))
    if g.k % 2:
        # a K_{k,2} block's non-root sum is odd and can land on a degree-2 sum;
        # swapping the first two pairs moves it by 2 without touching any degree-2 sum
        deg2 = set(_sums(g, labels)[1])
        for idx, part in enumerate(plan.parts):
            if not plan.is_kk2(idx):
                continue
            sx, _ = _sums(g, labels)
            if sx[part.x_ids[1]] in deg2:
                lab = relabel_component_with_pins(part.graph, plan.pools[idx], flips=(1, 2))
                _write(labels, part, lab)
                if trace is not None:
                    trace.flipped.append(idx)
    return labels


def label_disconnected_odd(g: BiregularGraph, best_effort: bool = False,
                           trace: MultiTrace | None = None) -> Labelling:
    """Antimagic labelling of a (k,2)-biregular graph with any number of components."""
    if g.k < 3:
        raise AntimagicError("K_TOO_SMALL", f"k={g.k}")
    comps = connected_components(g)
    if len(comps) == 1:
        return label_connected_odd(g) if g.k % 2 else label_connected_even(g)
    if g.k % 2 == 0 and not best_effort:
        raise AntimagicError("K_EVEN_DISCONNECTED",
                             "disconnected graphs with even k are not covered by the construction")
    plan = plan_components(g)
    trace = trace if trace is not None else MultiTrace()
    trace.plan = plan
    labels = _initial_labels(plan, trace)
    trace.initial_labels = list(labels)
    trace.cap = len(plan) * g.m

    if g.k % 2 == 0:
        lab = Labelling.from_labels(g, labels)
        trace.verified = check_antimagic(g, lab).ok
        return lab

    for _ in range(trace.cap):
        rec = detect_conflict(plan, labels)
        if rec is None:
            break
        before = _deg2_multiset(g, labels)
        case = repair_conflict(plan, labels, rec)
        sx, _ = _sums(g, labels)
        trace.rounds.append(RepairRound(rec.index, case, rec.witness, rec.root_sum,
                                        sx[plan.roots[rec.index].index], before,
                                        _deg2_multiset(g, labels)))
    else:
        if detect_conflict(plan, labels) is not None:
            raise AntimagicError("REPAIR_DIVERGED", f"still conflicting after {trace.cap} rounds")
    lab = Labelling.from_labels(g, labels)
    trace.verified = check_antimagic(g, lab).ok
    if not trace.verified:
        raise InternalInvariantError("repaired labelling is not antimagic")
    return lab
