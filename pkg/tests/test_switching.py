from collections import defaultdict

import pytest
from hypothesis import given

import strategies as S
from shtab.evacuation import reversal
from shtab.jdt import rectification_orders, rectify, shape_trace
from shtab.shapes import SkewShape
from shtab.switching import (PerforatedPair, infusion, sp, switch_step, switching_process, sw, sw_raw)
from shtab.tableau import TableauError, is_lrs, lrs_tableaux, standard_tableaux, std, yamanouchi
from shtab.universe import skew_shapes


@given(S.tableau_pairs(straight_inner=False))
def test_switching_is_an_involution(pair):
    s, t = pair
    moved_t, moved_s = sw(s, t)
    assert sw(moved_t, moved_s) == (s, t)


@given(S.tableau_pairs(straight_inner=False))
def test_switching_preserves_knuth_classes(pair):
    s, t = pair
    moved_t, moved_s = sw(s, t)
    assert rectify(moved_t)[0] == rectify(t)[0]
    assert rectify(moved_s)[0] == rectify(s)[0]
    assert moved_t.weight(t.n) == t.weight(t.n)


@given(S.tableau_pairs(straight_inner=False))
def test_switching_commutes_with_standardization(pair):
    s, t = pair
    moved_t, moved_s = sw(s, t)
    assert sw(std(s), t) == (moved_t, std(moved_s))
    assert sw(s, std(t)) == (std(moved_t), moved_s)


@given(S.tableau_pairs(max_total=5))
def test_switching_respects_canonical_form(pair):
    s, t = pair
    expected = sw(s, t)
    for raw_s in S.representatives(s):
        for raw_t in S.representatives(t):
            first, second = sw_raw(raw_s, raw_t)
            assert (first.to_tableau(t.n), second.to_tableau(s.n)) == expected


@given(S.tableau_pairs(straight_inner=False))
def test_switching_commutes_with_reversal(pair):
    s, t = pair
    moved_t, moved_s = sw(s, t)
    assert reversal(moved_t) == sw(s, reversal(t))[0]
    assert reversal(moved_s) == sw(reversal(s), t)[1]


@given(S.tableau_pairs(straight_inner=False).filter(lambda p: p[0].is_standard() and p[1].is_standard()))
def test_infusion_agrees_with_switching_on_standard_pairs(pair):
    s, t = pair
    assert infusion(s, t) == sw(s, t)


@pytest.mark.parametrize("shape", [s for s in skew_shapes(7, 7) if s.outer.size <= 7 and s.inner.size <= 3],
                         ids=str)
def test_dual_equivalence_transport(shape):
    orders = rectification_orders(shape.inner)
    classes = defaultdict(list)
    for t in standard_tableaux(shape):
        classes[tuple(tuple(shape_trace(t, u)) for u in orders)].append(t)
    for w in standard_tableaux(SkewShape(shape.inner)):
        for members in classes.values():
            images = [sw(w, t) for t in members]
            assert len({second for _, second in images}) == 1
            assert len({first.shape for first, _ in images}) == 1


def test_lrs_switching_bijection_example():
    lam, mu, nu = (4, 2, 1), (2, 1), (3, 1)
    tabs = lrs_tableaux(lam, mu, nu)
    images = {sw(yamanouchi(mu), t)[1] for t in tabs}
    assert len(images) == len(tabs)
    assert all(is_lrs(x) and x.weight() == tuple(mu) for x in images)


def test_perforated_pair_problems_detect_invalid_pairs():
    assert PerforatedPair.from_text("# # # 1' 1 2'\n# 1' 2' 2\n1 2 1").problems() == []
    bad = PerforatedPair.from_text("1 2\n1")
    assert bad.problems()


def test_switch_step_rejects_non_a_box():
    pair = PerforatedPair.from_text("# 1 2\n2")
    with pytest.raises(TableauError):
        switch_step(pair, (1, 3))


def test_sp_returns_b_part_first():
    pair = PerforatedPair.from_text("# 1 2\n2")
    b_part, a_part = sp(pair)
    assert set(b_part.values()) == {pair.filling()[(1, 3)]}
    assert len(switching_process(pair)) >= 1
    assert switching_process(pair)[-1][1].is_fully_switched()
