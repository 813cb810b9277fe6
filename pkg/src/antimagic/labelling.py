"""Edge labellings with running vertex sums."""

from __future__ import annotations

from typing import Iterable

from .errors import AntimagicError, InternalInvariantError
from .graph import X, BiregularGraph, VertexRef


class Labelling:
    """Partial or total map edge-index -> label, with running partial sums.

    ``sigma(v)`` is the sum of the labels already placed on edges incident
    to ``v``.  For every X vertex the value of that sum at the moment its
    (k-1)-th incident edge got labelled is kept in ``sigma_at_k_minus_1``;
    the layer-bound checks read it.
    """

    def __init__(self, graph: BiregularGraph):
        self.graph = graph
        self.labels: list[int | None] = [None] * graph.m
        self._used: set[int] = set()
        self._sx = [0] * graph.x_count
        self._sy = [0] * graph.y_count
        self._cx = [0] * graph.x_count
        self.sigma_at_k_minus_1: dict[int, int] = {}

    @classmethod
    def from_labels(cls, graph: BiregularGraph, labels: Iterable[int]) -> "Labelling":
        lab = cls(graph)
        for e, value in enumerate(labels):
            if value is not None:
                lab.assign(e, value)
        return lab

    def copy(self) -> "Labelling":
        other = Labelling(self.graph)
        other.labels = list(self.labels)
        other._used = set(self._used)
        other._sx = list(self._sx)
        other._sy = list(self._sy)
        other._cx = list(self._cx)
        other.sigma_at_k_minus_1 = dict(self.sigma_at_k_minus_1)
        return other

    def assign(self, e: int, label: int) -> None:
        if self.labels[e] is not None:
            raise InternalInvariantError(f"edge {e} already labelled {self.labels[e]}")
        if label in self._used:
            raise InternalInvariantError(f"label {label} used twice")
        self.labels[e] = label
        self._used.add(label)
        x, y = self.graph.edges[e]
        self._sx[x] += label
        self._sy[y] += label
        self._cx[x] += 1
        if self._cx[x] == self.graph.k - 1:
            self.sigma_at_k_minus_1[x] = self._sx[x]

    def unassign(self, e: int) -> int:
        label = self.labels[e]
        if label is None:
            raise InternalInvariantError(f"edge {e} is not labelled")
        self.labels[e] = None
        self._used.discard(label)
        x, y = self.graph.edges[e]
        self._sx[x] -= label
        self._sy[y] -= label
        self._cx[x] -= 1
        return label

    def replace(self, e: int, label: int) -> None:
        """Relabel an edge in place, keeping the k-1 snapshot untouched."""
        snapshot = dict(self.sigma_at_k_minus_1)
        self.unassign(e)
        self.assign(e, label)
        self.sigma_at_k_minus_1 = snapshot

    def label(self, e: int) -> int | None:
        return self.labels[e]

    def is_labelled(self, e: int) -> bool:
        return self.labels[e] is not None

    def sigma(self, v: VertexRef) -> int:
        return self._sx[v.index] if v.side == X else self._sy[v.index]

    def unlabelled_at(self, v: VertexRef) -> list[int]:
        return [e for e in self.graph.incident(v) if self.labels[e] is None]

    def used(self) -> frozenset[int]:
        return frozenset(self._used)

    @property
    def is_total(self) -> bool:
        return all(lab is not None for lab in self.labels)

    def edge_of_label(self, label: int) -> int:
        for e, lab in enumerate(self.labels):
            if lab == label:
                return e
        raise AntimagicError("NO_SUCH_LABEL", f"label {label} not assigned")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Labelling) and self.graph == other.graph
                and self.labels == other.labels)

    def __repr__(self) -> str:
        done = sum(lab is not None for lab in self.labels)
        return f"Labelling({done}/{len(self.labels)} edges)"
