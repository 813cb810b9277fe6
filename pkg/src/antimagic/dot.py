"""Graphviz DOT export."""

from __future__ import annotations

from .graph import X, BiregularGraph
from .labelling import Labelling


def _name(v) -> str:
    return f"{v.side.lower()}{v.index}"


def export_dot(g: BiregularGraph, lab: Labelling | None = None) -> str:
    """X vertices as boxes, Y vertices as circles; labels and sums when given."""
    sums = None
    if lab is not None and lab.is_total:
        sums = {v: lab.sigma(v) for v in g.vertices()}
    out = ["graph G {"]
    for v in g.vertices():
        shape = "box" if v.side == X else "circle"
        text = _name(v) if sums is None else f"{_name(v)}\\nsum={sums[v]}"
        out.append(f'  {_name(v)} [shape={shape}, label="{text}"];')
    for e in sorted(range(g.m), key=lambda e: g.edges[e]):
        a, b = g.endpoints(e)
        attr = ""
        if lab is not None and lab.labels[e] is not None:
            attr = f' [label="{lab.labels[e]}"]'
        out.append(f"  {_name(a)} -- {_name(b)}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"
