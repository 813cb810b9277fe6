"""Constructive labelling of connected (k,2)-biregular graphs, k even.

Same layer pipeline as the odd case; only the labelling of F changes.  All
successor-side F edges are labelled first from the bottom of the layer's
labels, then their partners, sorted by the partial sum of the shared
degree-2 vertex.  When |F|/2 is even one partner is labelled early, so the
first label left for the partners is even and every F vertex ends odd.
"""

from __future__ import annotations

from .errors import AntimagicError
from .graph import BiregularGraph, VertexRef
from .labeller_odd import (LabelTrace, LayerCursor, LayerRecord, check_connected,
                           label_layers, complete_labelling, resolve_root)
from .labelling import Labelling
from .layering import FPair, FSet, Layering, TypeTable

MOD2 = "MOD2"
MOD0_NO_TYPEK = "MOD0_NO_TYPEK"
MOD0_TYPEK = "MOD0_TYPEK"


def even_case(F: FSet, t_k: int) -> str:
    if len(F.edges) % 4 == 2:
        return MOD2
    return MOD0_TYPEK if t_k > 0 else MOD0_NO_TYPEK


def _label_partners(lab: Labelling, cursor: LayerCursor, pairs) -> None:
    """Unlabelled up edges of ``pairs``, by increasing sum of the mid vertex."""
    todo = [pr for pr in pairs if not lab.is_labelled(pr.up)]
    for pr in sorted(todo, key=lambda pr: (lab.sigma(pr.mid), pr.mid.index)):
        lab.assign(pr.up, cursor.take_low())


def step1_even_mod2(lay: Layering, types: TypeTable, F: FSet, lab: Labelling,
                    cursor: LayerCursor) -> None:
    if len(F.edges) % 4 != 2:
        raise AntimagicError("WRONG_CASE", f"|F|={len(F.edges)} is not 2 mod 4")
    for pr in sorted(F.pairs, key=lambda pr: pr.down):
        lab.assign(pr.down, cursor.take_low())
    _label_partners(lab, cursor, F.pairs)
    cursor.finish_step1()


def _seed(lab: Labelling, cursor: LayerCursor, pr: FPair) -> None:
    lab.assign(pr.down, cursor.take_low())
    lab.assign(pr.up, cursor.take_low())


def _pairs_below(F: FSet, w: VertexRef) -> list[FPair]:
    return sorted((pr for pr in F.pairs if pr.bottom == w), key=lambda pr: pr.mid)


def step1_even_mod0_no_typek(lay: Layering, types: TypeTable, F: FSet, lab: Labelling,
                             cursor: LayerCursor) -> None:
    t_k = types.t(cursor.layer, lay.graph.k)
    if len(F.edges) % 4 != 0 or t_k != 0:
        raise AntimagicError("WRONG_CASE", f"|F|={len(F.edges)}, t_k={t_k}")
    if not F.pairs:
        cursor.finish_step1()
        return
    start = min(pr.bottom for pr in F.pairs)
    _seed(lab, cursor, _pairs_below(F, start)[0])
    for pr in sorted(F.pairs, key=lambda pr: pr.down):
        if not lab.is_labelled(pr.down):
            lab.assign(pr.down, cursor.take_low())
    _label_partners(lab, cursor, F.pairs)
    cursor.finish_step1()


def step1_even_mod0_typek(lay: Layering, types: TypeTable, F: FSet, lab: Labelling,
                          cursor: LayerCursor) -> None:
    k = lay.graph.k
    t_k = types.t(cursor.layer, k)
    if len(F.edges) % 4 != 0 or t_k == 0:
        raise AntimagicError("WRONG_CASE", f"|F|={len(F.edges)}, t_k={t_k}")
    full = [w for w in lay.level(2 * cursor.layer) if types.even_type[w] == k]
    queues = {w: _pairs_below(F, w) for w in full}
    first = queues[full[0]].pop(0)
    _seed(lab, cursor, first)
    # round-robin starting after u_1; a vertex whose F edges are done is skipped
    turn = 1
    while any(queues.values()):
        w = full[turn % len(full)]
        if queues[w]:
            lab.assign(queues[w].pop(0).down, cursor.take_low())
        turn += 1
    for pr in sorted(F.pairs, key=lambda pr: pr.down):
        if not lab.is_labelled(pr.down):
            lab.assign(pr.down, cursor.take_low())
    _label_partners(lab, cursor, F.pairs)
    cursor.finish_step1()


_STEPS = {
    MOD2: step1_even_mod2,
    MOD0_NO_TYPEK: step1_even_mod0_no_typek,
    MOD0_TYPEK: step1_even_mod0_typek,
}


def _even_step1(lay, types, F, lab, cursor, override, rec: LayerRecord):
    if override is not None:
        raise AntimagicError("PIN_CONFLICT", "start overrides apply to the odd walk only")
    case = even_case(F, types.t(cursor.layer, lay.graph.k))
    rec.case = case
    _STEPS[case](lay, types, F, lab, cursor)


def label_connected_even(g: BiregularGraph, root: VertexRef | None = None, *,
                         trace: LabelTrace | None = None, shift: int = 0) -> Labelling:
    check_connected(g)
    if g.k % 2:
        raise AntimagicError("K_ODD", f"k={g.k} is odd; use label_connected_odd")
    root = resolve_root(g, root)
    pool = range(shift + 1, shift + g.m + 1)
    if g.x_count == 2:
        if trace is not None:
            trace.root, trace.complete = root, True
        return complete_labelling(g, root, pool)
    return label_layers(g, root, pool, _even_step1, trace=trace)
