"""Checking labellings: vertex sums, the antimagic predicate, structural invariants.

Nothing here reuses the labellers' running sums; every check recomputes from
the raw edge labels.  Failures are reported as data, never raised.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .errors import AntimagicError
from .graph import X, Y, BiregularGraph, VertexRef, connected_components, induced_subgraph
from .labelling import Labelling
from .layering import Layering, build_layering

PROFILES = ("odd", "even", "multi")


def _labels_of(lab) -> list:
    return list(lab.labels) if isinstance(lab, Labelling) else list(lab)


def vertex_sums(g: BiregularGraph, lab) -> dict[VertexRef, int]:
    labels = _labels_of(lab)
    if len(labels) != g.m or any(v is None for v in labels):
        raise AntimagicError("PARTIAL_LABELLING", "every edge needs a label")
    if sorted(labels) != list(range(1, g.m + 1)):
        raise AntimagicError("NOT_BIJECTIVE", f"labels are not a permutation of 1..{g.m}")
    sums = {v: 0 for v in g.vertices()}
    for (x, y), label in zip(g.edges, labels):
        sums[VertexRef(X, x)] += label
        sums[VertexRef(Y, y)] += label
    return sums


@dataclass(frozen=True)
class AntimagicResult:
    ok: bool
    collisions: tuple[tuple[VertexRef, VertexRef, int], ...]

    def __bool__(self) -> bool:
        return self.ok


def check_antimagic(g: BiregularGraph, lab) -> AntimagicResult:
    """Bijective onto 1..m and all vertex sums distinct; lists every colliding pair."""
    labels = _labels_of(lab)
    if len(labels) != g.m or any(v is None for v in labels):
        raise AntimagicError("PARTIAL_LABELLING", "every edge needs a label")
    if len(set(labels)) != len(labels):
        raise AntimagicError("NOT_BIJECTIVE", "duplicate label")
    if sorted(labels) != list(range(1, g.m + 1)):
        return AntimagicResult(False, ())
    sums = vertex_sums(g, labels)
    by_value = defaultdict(list)
    for v, s in sums.items():
        by_value[s].append(v)
    collisions = []
    for s, vs in sorted(by_value.items()):
        vs.sort()
        collisions.extend((a, b, s) for i, a in enumerate(vs) for b in vs[i + 1:])
    return AntimagicResult(not collisions, tuple(collisions))


@dataclass(frozen=True)
class CheckResult:
    code: str
    ok: bool
    detail: str = ""


@dataclass
class InvariantReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.ok]

    def add(self, code: str, problems: Sequence[str], note: str = "") -> None:
        if problems:
            shown = "; ".join(problems[:5]) + (f" (+{len(problems) - 5} more)" if len(problems) > 5 else "")
            self.checks.append(CheckResult(code, False, shown))
        else:
            self.checks.append(CheckResult(code, True, note))

    def render(self) -> str:
        lines = []
        for c in self.checks:
            if c.ok:
                lines.append(f"PASS {c.code}" + (f" {c.detail}" if c.detail else ""))
            else:
                lines.append(f"FAIL {c.code} {c.detail}")
        return "\n".join(lines) + "\n"


def _parity_problems(g, sums, exempt: set[VertexRef]) -> list[str]:
    out = []
    for v, s in sums.items():
        if v in exempt:
            continue
        if v.side == Y and s % 2 == 0:
            out.append(f"{v} has even sum {s}")
        elif v.side == X and s % 2:
            out.append(f"{v} has odd sum {s}")
    return out


def _pair_problems(g, labels) -> list[str]:
    out = []
    for j in range(g.y_count):
        a, b = (labels[e] for e in g.y_adj[j])
        if abs(a - b) != 1:
            out.append(f"y{j} carries {a},{b}")
    return out


def _gap_problems(g, sums) -> list[str]:
    values = sorted(s for v, s in sums.items() if v.side == Y)
    return [f"degree-2 sums {a} and {b}" for a, b in zip(values, values[1:]) if b - a < 4]


def _level_problems(lay: Layering, sums_of) -> tuple[list[str], list[str]]:
    """Intra-level injectivity and strict decrease of sums with depth (even levels >= 2)."""
    intra, order = [], []
    even_levels = [lay.level(d) for d in range(2, lay.depth + 1, 2)]
    for d, level in zip(range(2, lay.depth + 1, 2), even_levels):
        values = [sums_of(v) for v in level]
        if len(set(values)) != len(values):
            intra.append(f"level {d} repeats a sum")
    for idx in range(len(even_levels) - 1):
        shallow = min(sums_of(v) for v in even_levels[idx])
        deeper = max(sums_of(v) for lv in even_levels[idx + 1:] for v in lv)
        if not shallow > deeper:
            order.append(f"level {2 * idx + 2} min {shallow} <= deeper max {deeper}")
    return intra, order


def _root_problems(lay: Layering, sums_of) -> list[str]:
    r = lay.root
    top = sums_of(r)
    return [f"{v} sum {sums_of(v)} >= root {top}" for level in lay.levels[1:] for v in level
            if sums_of(v) >= top]


def _step1_problems(lab: Labelling, trace) -> tuple[list[str], list[str]]:
    g, lay = lab.graph, trace.layering
    k = g.k
    upper, lower = [], []
    for rec in trace.layers:
        m_i = rec.labels[0]
        M_i = rec.labels[len(rec.f_set.edges) - 1] if rec.f_set.edges else m_i - 1
        bound = (m_i + M_i - 1) * (k - 1)
        for w, s in rec.step1_sigma.items():
            if 2 * s > bound:
                upper.append(f"layer {rec.index}: {w} sigma' {s} > {bound}/2")
        if rec.index >= 2:
            for u in lay.level(2 * rec.index - 2):
                s = lab.sigma_at_k_minus_1.get(u.index)
                if s is None or 2 * s < bound:
                    lower.append(f"layer {rec.index}: {u} sigma'_(k-1) {s} < {bound}/2")
    return upper, lower


def _even_layer_problems(lab: Labelling, trace, sums_of) -> tuple[list[str], list[str]]:
    g, lay = lab.graph, trace.layering
    k = g.k
    shape, gap = [], []
    for rec in trace.layers:
        if not rec.f_set.pairs:
            continue
        mids = [pr.mid for pr in rec.f_set.pairs]
        values = sorted(sums_of(v) for v in mids)
        if rec.case == "MOD2":
            if values[0] % 2 == 0 or any(b - a != 2 for a, b in zip(values, values[1:])):
                shape.append(f"layer {rec.index}: F sums {values} not an odd step-2 progression")
        else:
            if any(v % 2 == 0 for v in values) or len(set(values)) != len(values):
                shape.append(f"layer {rec.index}: F sums {values} not odd and distinct")
        if rec.case == "MOD0_TYPEK" and rec.index >= 2:
            t = rec.t_k
            need = (k - 1) * t * (k // 2 - 2) + (k - 1) * (k - 2) // 2 + 2
            typek = [w for w in lay.level(2 * rec.index) if trace.types.even_type[w] == k]
            for u in typek:
                for v in lay.level(2 * rec.index - 2):
                    if v == lay.root:
                        continue
                    if sums_of(v) - sums_of(u) < need:
                        gap.append(f"layer {rec.index}: sigma({v})-sigma({u}) = "
                                   f"{sums_of(v) - sums_of(u)} < {need}")
    return shape, gap


def check_structural_invariants(g: BiregularGraph, lab, lay: Layering | None = None,
                                profile: str = "odd", trace=None,
                                roots: Sequence[VertexRef] | None = None) -> InvariantReport:
    """Per-profile invariant suite.

    ``odd`` / ``even`` expect a connected graph (layering from ``lay``, the
    trace, or root x0).  ``multi`` checks every component against its own
    layering, rooted at ``roots`` or at each component's smallest x-id.
    ``trace`` (a :class:`~antimagic.labeller_odd.LabelTrace` from the run that
    produced ``lab``) enables the layer-bound checks.
    """
    if profile not in PROFILES:
        raise AntimagicError("BAD_PROFILE", f"profile must be one of {PROFILES}")
    labels = _labels_of(lab)
    sums = vertex_sums(g, labels)
    report = InvariantReport()

    if profile in ("odd", "even"):
        if lay is None:
            lay = trace.layering if trace is not None and trace.layering is not None else None
        if lay is None:
            root = trace.root if trace is not None and trace.root is not None else VertexRef(X, 0)
            lay = build_layering(g, root)
        complete = g.x_count == 2
        if complete:
            report.add("PARITY", [], "K_{k,2} exempt")
        else:
            report.add("PARITY", _parity_problems(g, sums, {lay.root}))
        intra, order = _level_problems(lay, sums.__getitem__)
        report.add("INTRA_LEVEL", intra)
        report.add("LEVEL_ORDER", order)
        if complete:
            report.add("ROOT_DOMINANCE", [], "K_{k,2} exempt")
        else:
            report.add("ROOT_DOMINANCE", _root_problems(lay, sums.__getitem__))
        if profile == "odd":
            report.add("CONSECUTIVE_PAIRS", _pair_problems(g, labels))
            report.add("DEG2_GAP", _gap_problems(g, sums))
            if trace is not None and trace.layers and isinstance(lab, Labelling):
                upper, lower = _step1_problems(lab, trace)
                report.add("STEP1_UPPER", upper)
                report.add("STEP1_LOWER", lower)
        elif trace is not None and trace.layers and isinstance(lab, Labelling):
            shape, gap = _even_layer_problems(lab, trace, sums.__getitem__)
            report.add("EVEN_LAYER_SUMS", shape)
            report.add("EVEN_TYPEK_GAP", gap)
        return report

    comps = connected_components(g)
    if roots is None:
        roots = [VertexRef(X, min(v.index for v in c if v.side == X)) for c in comps]
    root_set = set(roots)
    exempt = set(root_set)
    intra_all, order_all, root_all = [], [], []
    for comp in comps:
        (root,) = [r for r in roots if r in comp]
        sub = induced_subgraph(g, comp)
        if sub.graph.x_count == 2:
            exempt |= comp
            continue
        local_root = VertexRef(X, sub.x_ids.index(root.index))
        lay_c = build_layering(sub.graph, local_root)

        def sums_of(v, sub=sub):
            return sums[sub.to_parent(v)]

        intra, order = _level_problems(lay_c, sums_of)
        intra_all += [f"component of {root}: {p}" for p in intra]
        order_all += [f"component of {root}: {p}" for p in order]
        root_all += [f"component of {root}: {p}" for p in _root_problems(lay_c, sums_of)]
    report.add("PARITY", _parity_problems(g, sums, {v for v in exempt if v.side == X}))
    report.add("INTRA_LEVEL", intra_all)
    report.add("LEVEL_ORDER", order_all)
    report.add("ROOT_DOMINANCE", root_all)
    report.add("CONSECUTIVE_PAIRS", _pair_problems(g, labels))
    report.add("DEG2_GAP", _gap_problems(g, sums))
    return report
