"""Test-instance generators.

Random connected graphs come from the configuration model: pair up the
k*xCount half-edges of X uniformly, reject pairings with loops, and subdivide
every (possibly parallel) multigraph edge once.  Parallel edges turn into
4-cycles, so C4-containing instances are reachable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AntimagicError
from .graph import BiregularGraph, connected_components, disjoint_union

DEFAULT_MAX_RETRIES = 1000


@dataclass(frozen=True)
class GenConfig:
    k: int
    x_count: int
    seed: int = 0
    max_retries: int = DEFAULT_MAX_RETRIES

    def __post_init__(self):
        if self.k < 3:
            raise AntimagicError("K_TOO_SMALL", f"k={self.k}")
        if self.x_count < 2:
            raise AntimagicError("BAD_CONFIG", f"xCount={self.x_count} must be >= 2")
        if (self.k * self.x_count) % 2:
            raise AntimagicError("BAD_CONFIG", f"k*xCount={self.k * self.x_count} must be even")
        if self.max_retries < 1:
            raise AntimagicError("BAD_CONFIG", "maxRetries must be positive")


def gen_kk2(k: int) -> BiregularGraph:
    """K_{k,2}: X = {0, 1}, Y = {0..k-1}."""
    if k < 3:
        raise AntimagicError("K_TOO_SMALL", f"k={k}")
    return BiregularGraph(k, 2, k, tuple((x, y) for x in range(2) for y in range(k)))


def subdivide(k: int, x_count: int, multi_edges) -> BiregularGraph:
    """Subdivide each edge of a loopless k-regular multigraph on range(x_count)."""
    multi_edges = sorted((min(a, b), max(a, b)) for a, b in multi_edges)
    edges = []
    for y, (a, b) in enumerate(multi_edges):
        if a == b:
            raise AntimagicError("LOOP", f"loop at {a} cannot be subdivided into a simple graph")
        edges.append((a, y))
        edges.append((b, y))
    return BiregularGraph(k, x_count, len(multi_edges), tuple(sorted(edges)))


def _pairing(rng: np.random.Generator, k: int, x_count: int):
    stubs = np.repeat(np.arange(x_count), k)
    rng.shuffle(stubs)
    pairs = stubs.reshape(-1, 2)
    if np.any(pairs[:, 0] == pairs[:, 1]):
        return None
    return [(int(a), int(b)) for a, b in pairs]


def gen_connected(cfg: GenConfig) -> BiregularGraph:
    rng = np.random.default_rng(cfg.seed)
    for _ in range(cfg.max_retries):
        pairs = _pairing(rng, cfg.k, cfg.x_count)
        if pairs is None:
            continue
        g = subdivide(cfg.k, cfg.x_count, pairs)
        if len(connected_components(g)) == 1:
            return g
    raise AntimagicError(
        "RETRIES_EXHAUSTED",
        f"no connected loopless pairing for k={cfg.k}, xCount={cfg.x_count}, "
        f"seed={cfg.seed} after {cfg.max_retries} tries",
    )


def gen_multi(configs, k: int) -> BiregularGraph:
    """Disjoint union of connected instances, smallest component first."""
    configs = list(configs)
    if not configs:
        raise AntimagicError("EMPTY_UNION", "need at least one component config")
    for cfg in configs:
        if cfg.k != k:
            raise AntimagicError("K_MISMATCH", f"config has k={cfg.k}, expected {k}")
    parts = [gen_connected(cfg) for cfg in configs]
    parts.sort(key=lambda h: h.n)
    return disjoint_union(parts)


def has_c4(g: BiregularGraph) -> bool:
    """True when two Y vertices share both neighbours."""
    seen = set()
    for j in range(g.y_count):
        pair = tuple(sorted(g.edges[e][0] for e in g.y_adj[j]))
        if pair in seen:
            return True
        seen.add(pair)
    return False


def subdivided_k4() -> BiregularGraph:
    """K_4 with each edge subdivided once (k=3, 4 X vertices, 6 Y vertices)."""
    return subdivide(3, 4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
