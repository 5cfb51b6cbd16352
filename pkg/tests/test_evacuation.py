from collections import defaultdict
from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

import strategies as S
from shtab.evacuation import (eta, eta_ij, evac, evac_k, reversal, reversal_switching, sigma,
                              tilde_evac, tilde_evac_ij)
from shtab.jdt import complement, rectification_orders, rectify, shape_trace
from shtab.shapes import Permutation
from shtab.tableau import ShiftedTableau, TableauError, standard_tableaux
from shtab.universe import skew_shapes


@given(S.straight_tableaux())
def test_evacuation_routes_agree(t):
    assert evac(t) == evac(t, route="switching")


@given(S.straight_tableaux())
def test_evacuation_is_a_weight_reversing_involution(t):
    e = evac(t)
    assert e.shape == t.shape
    assert e.weight(t.n) == tuple(reversed(t.weight(t.n)))
    assert evac(e) == t


@given(S.skew_tableaux())
def test_reversal_routes_agree_and_reversal_is_an_involution(t):
    r = reversal(t)
    assert r == reversal_switching(t)
    assert reversal(r) == t


@given(S.skew_tableaux(), st.data())
def test_reversal_does_not_depend_on_the_filler(t, data):
    filler = data.draw(st.sampled_from(rectification_orders(t.shape.inner)))
    assert reversal_switching(t, filler) == reversal(t)


@lru_cache(maxsize=None)
def _standard_by_shape(shape):
    return standard_tableaux(shape)


def _traces(t):
    return tuple(tuple(shape_trace(t, u)) for u in rectification_orders(t.shape.inner))


@pytest.mark.parametrize("shape", [s for s in skew_shapes(6, 5) if s.inner.size <= 4], ids=str)
def test_reversal_is_the_unique_dual_equivalent_tableau_knuth_equivalent_to_complement(shape):
    tabs = _standard_by_shape(shape)
    by_rect = defaultdict(list)
    for u in tabs:
        by_rect[rectify(u)[0]].append(u)
    for t in tabs:
        target = rectify(complement(t))[0]
        matches = [u for u in by_rect[target] if _traces(u) == _traces(t)]
        assert matches == [reversal(t)]


def test_evacuation_needs_a_straight_shape():
    with pytest.raises(TableauError):
        evac(ShiftedTableau.from_text("# 1\n2"))
    with pytest.raises(ValueError):
        evac(ShiftedTableau.from_text("1 2"), route="nope")


@given(S.straight_tableaux())
def test_switching_evacuation_matches_evacuation_on_straight_shapes(t):
    assert tilde_evac(t) == evac(t)
    for k in range(1, t.n + 1):
        assert tilde_evac_ij(t, 1, k) == eta_ij(t, 1, k) == evac_k(t, k)


@given(S.any_tableaux(), st.data())
def test_eta_acts_on_weights_and_fixes_other_letters(t, data):
    i = data.draw(st.integers(1, t.n))
    j = data.draw(st.integers(i, t.n))
    out = eta_ij(t, i, j)
    assert out.weight(t.n) == Permutation.reverse_range(i, j, t.n).act_vector(t.weight(t.n))
    for cell, x in t.items():
        if not i <= x.value <= j:
            assert out[cell] == x
    assert eta_ij(out, i, j) == t


@given(S.any_tableaux(), st.data())
def test_sigma_is_an_involution_swapping_weights(t, data):
    if t.n < 2:
        return
    i = data.draw(st.integers(1, t.n - 1))
    out = sigma(t, i)
    assert sigma(out, i) == t
    assert out.weight(t.n) == Permutation.simple(i, t.n).act_vector(t.weight(t.n))


def test_eta_dispatches_on_shape():
    straight = ShiftedTableau.from_text("1 1 2")
    skew = ShiftedTableau.from_text("# 1 2\n2")
    assert eta(straight) == evac(straight)
    assert eta(skew) == reversal(skew)


def test_tilde_evac_differs_from_eta_off_the_first_letter():
    t = ShiftedTableau.from_text("1 1 1 1 3'\n2 2 3'\n3")
    assert tilde_evac_ij(t, 2, 3) != eta_ij(t, 2, 3)
