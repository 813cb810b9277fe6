import pytest
from conftest import two_typek_graph, mod2_graph

from antimagic import (AntimagicError, GenConfig, LabelTrace, Labelling, build_F, build_layering,
                       check_antimagic, check_structural_invariants, classify_types,
                       gen_connected, gen_kk2, label_connected_even, vertex_sums)
from antimagic.graph import xv, yv
from antimagic.labeller_even import (MOD0_NO_TYPEK, MOD0_TYPEK, MOD2, even_case,
                                     step1_even_mod0_no_typek, step1_even_mod0_typek,
                                     step1_even_mod2)
from antimagic.labeller_odd import LayerCursor


def _downs_by_bottom(lab, F):
    out = {}
    for pr in F.pairs:
        out.setdefault(pr.bottom, set()).add(lab.label(pr.down))
    return out


def test_two_typek_round_robin():
    g = two_typek_graph()
    trace = LabelTrace()
    lab = label_connected_even(g, trace=trace)
    rec = trace.record(2)
    assert (rec.case, rec.t_k, len(rec.f_set.edges)) == (MOD0_TYPEK, 2, 12)
    downs = _downs_by_bottom(lab, rec.f_set)
    assert downs[xv(5)] == {1, 4, 6}
    assert downs[xv(6)] == {3, 5, 7}
    mids = sorted(lab.sigma(pr.mid) for pr in rec.f_set.pairs)
    assert mids == [3, 11, 13, 15, 17, 19]
    assert check_antimagic(g, lab).ok


def test_mod2_example():
    g = mod2_graph()
    trace = LabelTrace()
    lab = label_connected_even(g, trace=trace)
    rec = trace.record(2)
    assert rec.case == MOD2
    pairs = sorted(rec.f_set.pairs, key=lambda pr: pr.down)
    assert [lab.label(pr.down) for pr in pairs] == [1, 2, 3]
    assert [lab.label(pr.up) for pr in pairs] == [4, 5, 6]
    assert [lab.sigma(pr.mid) for pr in pairs] == [5, 7, 9]
    assert check_antimagic(g, lab).ok


def test_even_case_dispatch():
    class F:
        def __init__(self, n):
            self.edges = list(range(n))
    assert even_case(F(6), 0) == MOD2
    assert even_case(F(6), 3) == MOD2
    assert even_case(F(8), 0) == MOD0_NO_TYPEK
    assert even_case(F(8), 1) == MOD0_TYPEK


def _typek_layers(seeds, k):
    for seed in seeds:
        g = gen_connected(GenConfig(k, 24, seed=seed))
        trace = LabelTrace()
        lab = label_connected_even(g, trace=trace)
        for rec in trace.layers:
            yield g, trace, lab, rec


def test_round_robin_pattern_random():
    seen = 0
    for g, trace, lab, rec in _typek_layers(range(40), 4):
        if rec.case != MOD0_TYPEK:
            continue
        full = [w for w in trace.layering.level(2 * rec.index) if trace.types.even_type[w] == g.k]
        downs = _downs_by_bottom(lab, rec.f_set)
        a = rec.labels[0]
        q = len(full)
        # u_1 opens with a and a+1 on one pair, then every q-th label from a+1+q
        first = sorted(downs[full[0]])
        assert first[0] == a
        if all(len(downs[w]) == len(first) for w in full):
            for j, w in enumerate(full[1:], start=1):
                assert sorted(downs[w])[0] == a + 1 + j
            assert first[1:] == [a + 1 + t * q for t in range(1, len(first))]
        seen += 1
    assert seen > 0


def test_mod0_no_typek_structure():
    seen = 0
    for g, trace, lab, rec in _typek_layers(range(60), 4):
        if rec.case != MOD0_NO_TYPEK or not rec.f_set.pairs:
            continue
        a = rec.labels[0]
        start = min(pr.bottom for pr in rec.f_set.pairs)
        seed_pair = min((pr for pr in rec.f_set.pairs if pr.bottom == start), key=lambda pr: pr.mid)
        assert (lab.label(seed_pair.down), lab.label(seed_pair.up)) == (a, a + 1)
        values = sorted(lab.sigma(pr.mid) for pr in rec.f_set.pairs)
        assert all(v % 2 for v in values) and len(set(values)) == len(values)
        seen += 1
    assert seen > 0


@pytest.mark.parametrize("k", [4, 6, 8])
def test_random_even_with_invariants(k):
    for seed in range(20):
        g = gen_connected(GenConfig(k, 16, seed=seed))
        trace = LabelTrace()
        lab = label_connected_even(g, trace=trace)
        assert check_antimagic(g, lab).ok
        report = check_structural_invariants(g, lab, profile="even", trace=trace)
        assert report.ok, report.render()


def _first_layer(g):
    lay = build_layering(g)
    types = classify_types(lay)
    return lay, types, build_F(lay, types, lay.p)


@pytest.mark.parametrize("builder,step", [
    (two_typek_graph, step1_even_mod2),
    (two_typek_graph, step1_even_mod0_no_typek),
    (mod2_graph, step1_even_mod0_typek),
    (mod2_graph, step1_even_mod0_no_typek),
])
def test_wrong_case(builder, step):
    g = builder()
    lay, types, F = _first_layer(g)
    cursor = LayerCursor(range(1, len(lay.layer(lay.p)) + 1), len(F.edges), lay.p)
    with pytest.raises(AntimagicError) as exc:
        step(lay, types, F, Labelling(g), cursor)
    assert exc.value.code == "WRONG_CASE"


def test_k_odd_rejected():
    with pytest.raises(AntimagicError) as exc:
        label_connected_even(gen_kk2(3))
    assert exc.value.code == "K_ODD"


def test_kk2_even_closed_form():
    g = gen_kk2(4)
    lab = label_connected_even(g)
    s = vertex_sums(g, lab)
    assert (s[xv(0)], s[xv(1)]) == (20, 16)
    assert [s[yv(j)] for j in range(4)] == [3, 7, 11, 15]
