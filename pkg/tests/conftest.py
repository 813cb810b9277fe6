from pathlib import Path

import pytest

from antimagic import BiregularGraph

DATA = Path(__file__).parent / "data"


def build(k, x_count, pairs):
    """Graph whose y_j joins the two x-ids in pairs[j]."""
    edges = sorted((x, j) for j, pr in enumerate(pairs) for x in pr)
    return BiregularGraph(k, x_count, len(pairs), tuple(edges))


def two_typek_graph():
    # r=0 joined to a..d (1..4); u1=5 and u2=6 each joined to a..d; type-2 tops (a,b), (c,d)
    pairs = [(0, 1), (0, 2), (0, 3), (0, 4)]
    pairs += [(5, x) for x in (1, 2, 3, 4)] + [(6, x) for x in (1, 2, 3, 4)]
    pairs += [(1, 2), (3, 4)]
    return build(4, 7, pairs)


def mod2_graph():
    # single type-4 vertex u=5 at the bottom: |F| = 6
    pairs = [(0, 1), (0, 2), (0, 3), (0, 4)] + [(5, x) for x in (1, 2, 3, 4)]
    pairs += [(1, 2), (1, 2), (3, 4), (3, 4)]
    return build(4, 6, pairs)


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def golden_graph():
    from antimagic import parse_graph
    return parse_graph((DATA / "subdivided_k4.bgl").read_text())
