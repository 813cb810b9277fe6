import pytest

from antimagic import (AntimagicError, GenConfig, LabelTrace, check_antimagic,
                       check_structural_invariants, gen_connected, gen_kk2, label_connected_odd,
                       subdivided_k4, vertex_sums)
from antimagic.graph import xv, yv


def test_vertex_sums_kk2():
    g = gen_kk2(3)
    s = vertex_sums(g, [2, 4, 6, 1, 3, 5])
    assert s[xv(0)] == 12 and s[yv(2)] == 11


def test_partial_and_non_bijective():
    g = gen_kk2(3)
    with pytest.raises(AntimagicError) as exc:
        vertex_sums(g, [1, 2, 3, 4, 5, None])
    assert exc.value.code == "PARTIAL_LABELLING"
    with pytest.raises(AntimagicError) as exc:
        vertex_sums(g, [1, 2, 3, 4, 5, 7])
    assert exc.value.code == "NOT_BIJECTIVE"
    with pytest.raises(AntimagicError) as exc:
        check_antimagic(g, [1, 1, 3, 4, 5, 6])
    assert exc.value.code == "NOT_BIJECTIVE"
    assert not check_antimagic(g, [1, 2, 3, 4, 5, 7]).ok


def test_collisions_listed():
    g = gen_kk2(3)
    # x0 gets 1+2+3 = 6, x1 gets 4+5+6 = 15; y0 = 1+4 = 5, y1 = 7, y2 = 9
    assert check_antimagic(g, [1, 2, 3, 4, 5, 6]).ok
    # x0 = 1+2+6 = 9 equals y2 = 6+3
    res = check_antimagic(g, [1, 2, 6, 5, 4, 3])
    assert not res.ok
    assert (xv(0), yv(2), 9) in res.collisions


def test_sum_identity_on_random():
    for seed in range(10):
        g = gen_connected(GenConfig(5, 12, seed=seed))
        lab = label_connected_odd(g)
        assert sum(vertex_sums(g, lab).values()) == g.m * (g.m + 1)


def test_odd_profile_with_trace_passes():
    g = gen_connected(GenConfig(3, 40, seed=5))
    trace = LabelTrace()
    lab = label_connected_odd(g, trace=trace)
    report = check_structural_invariants(g, lab, profile="odd", trace=trace)
    codes = [c.code for c in report.checks]
    assert "STEP1_UPPER" in codes and "STEP1_LOWER" in codes
    assert report.ok, report.render()
    assert report.render().startswith("PASS PARITY")


def test_broken_monotonicity_reported():
    g = subdivided_k4()
    labels = list(label_connected_odd(g, xv(0)).labels)
    # move label 1 onto the root's heaviest edge: the root loses dominance
    hi = max(g.incident(xv(0)), key=lambda e: labels[e])
    lo = labels.index(1)
    labels[hi], labels[lo] = labels[lo], labels[hi]
    report = check_structural_invariants(g, labels, profile="odd")
    failed = {c.code for c in report.failures()}
    assert "ROOT_DOMINANCE" in failed
    assert "FAIL ROOT_DOMINANCE" in report.render()


def test_kk2_exempt():
    g = gen_kk2(3)
    report = check_structural_invariants(g, label_connected_odd(g), profile="odd")
    assert report.ok
    assert "PASS PARITY K_{k,2} exempt" in report.render()


def test_bad_profile():
    g = gen_kk2(3)
    with pytest.raises(AntimagicError) as exc:
        check_structural_invariants(g, label_connected_odd(g), profile="nope")
    assert exc.value.code == "BAD_PROFILE"
