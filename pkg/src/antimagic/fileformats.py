"""Line-oriented ``.bgl`` graph files and ``.lbl`` labelling files.

.bgl::

    # comment
    bgl <k> <xCount> <yCount>
    <x> <y>            (exactly m lines)

.lbl::

    lbl <m>
    <x> <y> <label>    (exactly m lines, labels a permutation of 1..m)
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .errors import AntimagicError, GraphFormatError, ValidationFailed
from .graph import BiregularGraph, validate
from .labelling import Labelling


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(fields, lineno, count):
    if len(fields) != count:
        raise GraphFormatError("MALFORMED_LINE", f"expected {count} fields, got {len(fields)}", lineno)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise GraphFormatError("MALFORMED_LINE", f"non-integer field in {' '.join(fields)!r}", lineno) from None


def parse_graph(text: str) -> BiregularGraph:
    lines = _significant_lines(text)
    header = next(lines, None)
    if header is None or header[1][0] != "bgl":
        raise GraphFormatError("HEADER_MISSING", "first significant line must be 'bgl <k> <xCount> <yCount>'",
                               header[0] if header else None)
    lineno, fields = header
    k, x_count, y_count = _ints(fields[1:], lineno, 3)
    edges = [tuple(_ints(f, n, 2)) for n, f in lines]
    report = validate(k, x_count, y_count, edges)
    if not report.ok:
        raise ValidationFailed(report)
    return BiregularGraph(k, x_count, y_count, tuple(edges))


def serialize_graph(g: BiregularGraph) -> str:
    out = [f"bgl {g.k} {g.x_count} {g.y_count}"]
    out.extend(f"{x} {y}" for x, y in sorted(g.edges))
    return "\n".join(out) + "\n"


def parse_labelling(text: str, g: BiregularGraph) -> Labelling:
    """Parse a ``.lbl`` document against ``g``.

    Labels must form a permutation of 1..m; every edge of ``g`` must appear once.
    """
    lines = _significant_lines(text)
    header = next(lines, None)
    if header is None or header[1][0] != "lbl":
        raise GraphFormatError("HEADER_MISSING", "first significant line must be 'lbl <m>'",
                               header[0] if header else None)
    (m,) = _ints(header[1][1:], header[0], 1)
    if m != g.m:
        raise GraphFormatError("MALFORMED_LINE", f"labelling has m={m}, graph has m={g.m}", header[0])
    index = {edge: e for e, edge in enumerate(g.edges)}
    labels: list[int | None] = [None] * g.m
    seen_labels: set[int] = set()
    count = 0
    for lineno, fields in lines:
        x, y, label = _ints(fields, lineno, 3)
        e = index.get((x, y))
        if e is None:
            raise GraphFormatError("MALFORMED_LINE", f"edge ({x}, {y}) not in graph", lineno)
        if labels[e] is not None:
            raise GraphFormatError("MALFORMED_LINE", f"edge ({x}, {y}) labelled twice", lineno)
        if not 1 <= label <= m or label in seen_labels:
            raise AntimagicError("NOT_BIJECTIVE", f"line {lineno}: label {label} repeated or outside 1..{m}")
        seen_labels.add(label)
        labels[e] = label
        count += 1
    if count != m:
        raise AntimagicError("PARTIAL_LABELLING", f"{m - count} edges have no label")
    return Labelling.from_labels(g, labels)


def serialize_labelling(lab: Labelling) -> str:
    g = lab.graph
    if not lab.is_total:
        raise AntimagicError("PARTIAL_LABELLING", "only total labellings can be written")
    out = [f"lbl {g.m}"]
    for e in sorted(range(g.m), key=lambda e: g.edges[e]):
        x, y = g.edges[e]
        out.append(f"{x} {y} {lab.labels[e]}")
    return "\n".join(out) + "\n"


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write ``text`` to ``path`` via a temp file in the same directory plus rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
