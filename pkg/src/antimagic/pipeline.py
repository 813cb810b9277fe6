"""Pick the right construction for a graph."""

from __future__ import annotations

from .errors import AntimagicError
from .graph import BiregularGraph, VertexRef, is_connected
from .labeller_even import label_connected_even
from .labeller_odd import LabelTrace, label_connected_odd
from .labelling import Labelling
from .multi import MultiTrace, label_disconnected_odd

PIPELINES = ("auto", "odd", "even", "multi")


def choose_pipeline(g: BiregularGraph) -> str:
    if not is_connected(g):
        return "multi"
    return "odd" if g.k % 2 else "even"


def label_graph(g: BiregularGraph, root: VertexRef | None = None, *, pipeline: str = "auto",
                best_effort: bool = False, trace=None) -> Labelling:
    """Label ``g`` with the construction matching its shape.

    ``trace`` should be a :class:`LabelTrace` for the connected pipelines and a
    :class:`MultiTrace` for ``multi``.
    """
    if pipeline not in PIPELINES:
        raise AntimagicError("BAD_PIPELINE", f"pipeline must be one of {PIPELINES}")
    actual = choose_pipeline(g)
    if pipeline == "auto":
        pipeline = actual
    elif pipeline != actual and not (pipeline == "multi" and g.k % 2):
        raise AntimagicError("BAD_PIPELINE", f"graph needs the {actual} pipeline, not {pipeline}")
    if pipeline == "multi":
        if root is not None:
            raise AntimagicError("ROOT_NOT_SUPPORTED", "--root only applies to connected graphs")
        return label_disconnected_odd(g, best_effort=best_effort,
                                      trace=trace if isinstance(trace, MultiTrace) else None)
    trace = trace if isinstance(trace, LabelTrace) else None
    if pipeline == "odd":
        return label_connected_odd(g, root, trace=trace)
    return label_connected_even(g, root, trace=trace)
