import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

import strategies as S
from oracles import one_box_intermediates
from shtab import growth
from shtab.evacuation import eta_ij, evac, evac_k, reversal
from shtab.jdt import rectification_orders, rectify
from shtab.shapes import StrictPartition, iter_strict_partitions
from shtab.switching import infusion
from shtab.tableau import ShiftedTableau, TableauError


def _two_step_pairs(max_size):
    out = []
    for size in range(0, max_size - 1):
        for nu in iter_strict_partitions(size):
            for lam in iter_strict_partitions(size + 2):
                if StrictPartition(lam).contains(nu):
                    out.append((StrictPartition(nu), StrictPartition(lam)))
    return out


@pytest.mark.parametrize("nu,lam", _two_step_pairs(10), ids=str)
def test_intermediates_match_direct_search(nu, lam):
    assert sorted(growth.intermediates(nu, lam)) == sorted(one_box_intermediates(nu, lam))


@pytest.mark.parametrize("nu,lam", _two_step_pairs(10), ids=str)
def test_local_rule_is_an_involution_on_intermediates(nu, lam):
    for mu in growth.intermediates(nu, lam):
        other = growth.local_rule(nu, mu, lam)
        assert growth.local_rule(nu, other, lam) == mu


def test_local_rule_rejects_non_chains():
    with pytest.raises(TableauError):
        growth.local_rule((1,), (3,), (3, 1))


@given(S.standard_tableaux().filter(lambda t: not t.is_straight), st.data())
def test_infusion_grid_matches_infusion(t, data):
    order = data.draw(st.sampled_from(rectification_orders(t.shape.inner)))
    first, second, grid = growth.infusion_growth(order, t)
    assert (first, second) == infusion(order, t)
    assert growth.rectify_growth(t) == rectify(t)[0]


@given(S.standard_tableaux().filter(lambda t: t.is_straight))
def test_evac_grid_matches_evac(t):
    assert growth.evac_growth(t) == evac(t)
    for k in range(1, t.n + 1):
        assert growth.evac_k_growth(t, k) == evac_k(t, k)


@given(S.standard_tableaux().filter(lambda t: not t.is_straight))
def test_reversal_composite_matches_reversal(t):
    result, composite = growth.reversal_growth(t)
    assert result == reversal(t)
    assert composite.check_links()


@given(S.standard_tableaux().filter(lambda t: t.n >= 2), st.data())
def test_eta_composite_matches_eta(t, data):
    i = data.draw(st.integers(1, t.n - 1))
    j = data.draw(st.integers(i + 1, t.n))
    result, composite = growth.eta_growth(t, i, j)
    assert result == eta_ij(t, i, j)
    assert composite.check_links()


@given(S.any_tableaux(max_cells=6, n=3).filter(lambda t: t.n >= 2), st.data())
def test_semistandard_eta_through_growth(t, data):
    i = data.draw(st.integers(1, t.n - 1))
    j = data.draw(st.integers(i + 1, t.n))
    assert growth.eta_semistandard_growth(t, i, j) == eta_ij(t, i, j)


def test_grid_json_flattens_segments():
    grid = growth.evac_grid([(), (1,), (2,)])
    data = json.loads(json.dumps(grid.to_json()))
    assert data["rows"][0] == [[], [1], [2]]
    assert data["segments"]["diagonal"] == [0, 0, 1, 1, 2, 2]


def test_evac_grid_needs_empty_start():
    with pytest.raises(TableauError):
        growth.evac_grid([(1,), (2,)])


def test_growth_evacuation_rejects_semistandard_input():
    with pytest.raises(TableauError):
        growth.evac_growth(ShiftedTableau.from_text("1 1"))
