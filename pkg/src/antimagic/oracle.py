"""Exhaustive backtracking oracle for desk-scale graphs.

Independent of the labellers: it has its own sum bookkeeping and its own
validity predicate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AntimagicError
from .graph import BiregularGraph

DEFAULT_BUDGET = 10


@dataclass
class OracleResult:
    exists: bool
    witness: list[int] | None
    states_explored: int
    count: int | None = None


def is_antimagic_assignment(g: BiregularGraph, labels) -> bool:
    """Direct check: permutation of 1..m with pairwise distinct vertex sums."""
    labels = list(labels)
    if sorted(labels) != list(range(1, g.m + 1)):
        return False
    sx = [0] * g.x_count
    sy = [0] * g.y_count
    for (x, y), label in zip(g.edges, labels):
        sx[x] += label
        sy[y] += label
    every = sx + sy
    return len(set(every)) == len(every)


def brute_force_search(g: BiregularGraph, budget: int = DEFAULT_BUDGET,
                       count_all: bool = False) -> OracleResult:
    """Search all label-to-edge bijections, pruning on finished-vertex collisions."""
    m = g.m
    if m > budget:
        raise AntimagicError("BUDGET_EXCEEDED", f"m={m} exceeds budget {budget}")
    order = sorted(range(m), key=lambda e: g.edges[e])
    # vertex ids: X as 0..nx-1, Y shifted after
    ends = [(x, g.x_count + y) for x, y in g.edges]
    left = [g.k] * g.x_count + [2] * g.y_count
    sums = [0] * (g.x_count + g.y_count)
    finished: dict[int, int] = {}
    labels = [0] * m
    used = [False] * (m + 1)
    states = 0
    count = 0
    witness = None

    def finish(v: int) -> bool:
        s = sums[v]
        if finished.get(s, 0):
            return False
        finished[s] = 1
        return True

    def unfinish(v: int) -> None:
        del finished[sums[v]]

    def rec(pos: int) -> bool:
        nonlocal states, count, witness
        if pos == m:
            count += 1
            if witness is None:
                witness = list(labels)
            return not count_all
        e = order[pos]
        a, b = ends[e]
        for label in range(1, m + 1):
            if used[label]:
                continue
            states += 1
            used[label] = True
            labels[e] = label
            sums[a] += label
            sums[b] += label
            left[a] -= 1
            left[b] -= 1
            done = []
            ok = True
            for v in (a, b):
                if left[v] == 0:
                    if finish(v):
                        done.append(v)
                    else:
                        ok = False
                        break
            if ok and rec(pos + 1):
                return True
            for v in done:
                unfinish(v)
            left[a] += 1
            left[b] += 1
            sums[a] -= label
            sums[b] -= label
            used[label] = False
        return False

    rec(0)
    return OracleResult(witness is not None, witness, states, count if count_all else None)
