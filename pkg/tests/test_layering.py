import pytest

from antimagic import (AntimagicError, FPins, build_F, build_layering, classify_types, gen_kk2,
                       subdivided_k4)
from antimagic.graph import xv, yv
from conftest import two_typek_graph


def test_kk2_layering():
    lay = build_layering(gen_kk2(3), xv(0))
    assert lay.levels == ((xv(0),), (yv(0), yv(1), yv(2)), (xv(1),))
    assert lay.p == 1 and len(lay.layer(1)) == 6 and lay.interval(1) == (1, 6)


def test_subdivided_k4_layering():
    lay = build_layering(subdivided_k4(), xv(0))
    assert [len(level) for level in lay.levels] == [1, 3, 3, 3]
    assert lay.depth == 3 and lay.p == 2
    assert len(lay.layer(2)) == 6 and lay.interval(2) == (1, 6)
    assert len(lay.layer(1)) == 6 and lay.interval(1) == (7, 12)


def test_root_must_be_x():
    with pytest.raises(AntimagicError) as exc:
        build_layering(gen_kk2(3), yv(0))
    assert exc.value.code == "ROOT_NOT_DEGREE_K"


def test_interval_parity_and_partition():
    g = two_typek_graph()
    lay = build_layering(g)
    assert sum(len(lay.layer(i)) for i in range(1, lay.p + 1)) == g.m
    covered = sorted(v for a, b in lay.intervals for v in range(a, b + 1))
    assert covered == list(range(1, g.m + 1))
    assert all(a % 2 == 1 and b % 2 == 0 for a, b in lay.intervals)


def test_types():
    types = classify_types(build_layering(gen_kk2(3)))
    assert types.even_type[xv(1)] == 3 and types.t(1, 3) == 1
    assert all(types.odd_type[yv(j)] == 1 for j in range(3))

    lay = build_layering(subdivided_k4())
    types = classify_types(lay)
    assert all(types.even_type[v] == 1 for v in lay.level(2))
    assert all(types.odd_type[v] == 2 for v in lay.level(3))

    assert classify_types(build_layering(gen_kk2(4))).even_type[xv(1)] == 4


def test_build_F_kk2():
    g = gen_kk2(3)
    lay = build_layering(g)
    F = build_F(lay, classify_types(lay), 1)
    assert F.excluded[xv(1)] == g.edge_between(xv(1), yv(0))
    expected = {g.edge_between(x, y) for x in (xv(0), xv(1)) for y in (yv(1), yv(2))}
    assert F.edges == expected


def test_build_F_empty_cases():
    lay = build_layering(subdivided_k4())
    types = classify_types(lay)
    assert build_F(lay, types, 2).edges == frozenset()
    assert build_F(lay, types, 1).edges == frozenset()


def test_F_size_matches_types():
    lay = build_layering(two_typek_graph())
    types = classify_types(lay)
    for i in range(1, lay.p + 1):
        F = build_F(lay, types, i)
        expected = sum(2 * (types.even_type[w] - 1) for w in lay.level(2 * i))
        assert len(F.edges) == expected
        assert build_F(lay, types, i) == F


def test_pins():
    g = two_typek_graph()
    lay = build_layering(g)
    types = classify_types(lay)
    u1 = xv(5)
    downs = sorted(lay.pred_edges(u1))
    default = build_F(lay, types, 2)
    out = default.excluded[u1]
    keep = next(e for e in downs if e != out)
    pinned = build_F(lay, types, 2, FPins(must_exclude=frozenset({keep})))
    assert pinned.excluded[u1] == keep and out in pinned.edges

    forced = build_F(lay, types, 2, FPins(must_include=frozenset({out})))
    assert out in forced.edges and forced.excluded[u1] != out

    with pytest.raises(AntimagicError) as exc:
        build_F(lay, types, 2, FPins(frozenset({keep}), frozenset({keep})))
    assert exc.value.code == "PIN_CONFLICT"
    with pytest.raises(AntimagicError):
        build_F(lay, types, 2, FPins(must_include=frozenset(downs)))
