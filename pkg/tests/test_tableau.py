import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import strategies as S
from oracles import brute_tableaux, linear_extensions, shifted_standard_count
from shtab.shapes import Letter, SkewShape, StrictPartition, iter_strict_partitions
from shtab.tableau import (RawFilling, ShiftedTableau, TableauError, chain_to_tableau,
                           enumerate_by_weight, enumerate_tableaux, is_lrs, lr_coefficient, sstd,
                           standard_tableaux, std, tableau_to_chain, yamanouchi)
from shtab.universe import skew_shapes, straight_shapes


def small_shapes(max_cells, width):
    return list(straight_shapes(max_cells)) + list(skew_shapes(max_cells, width))


@pytest.mark.parametrize("shape", small_shapes(4, 4), ids=str)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_brute_force(shape, n):
    expected = {frozenset(f.items()) for f in brute_tableaux(shape.outer, shape.inner, n)}
    got = [frozenset((c, tuple(x)) for c, x in t.items()) for t in enumerate_tableaux(shape, n)]
    assert len(got) == len(set(got))
    assert set(got) == expected


@pytest.mark.parametrize("shape", [SkewShape.parse(s) for s in ("3,2", "4,1", "3,1/1", "4,2/2")], ids=str)
def test_enumeration_matches_brute_force_five_cells(shape):
    expected = brute_tableaux(shape.outer, shape.inner, 3)
    assert len(list(enumerate_tableaux(shape, 3))) == len(expected)


@pytest.mark.parametrize("lam", [p for k in range(1, 11) for p in iter_strict_partitions(k)], ids=str)
def test_standard_count_matches_product_formula(lam):
    assert len(standard_tableaux(SkewShape(lam))) == shifted_standard_count(lam)


@pytest.mark.parametrize("shape", list(skew_shapes(7, 5)), ids=str)
def test_skew_standard_count_matches_linear_extensions(shape):
    assert len(standard_tableaux(shape)) == linear_extensions(shape.outer, shape.inner)


def test_rejects_non_semistandard():
    with pytest.raises(TableauError):
        ShiftedTableau.from_text("1 1'\n2")
    with pytest.raises(TableauError):
        ShiftedTableau.from_text("1 2\n2")
    with pytest.raises(TableauError):
        ShiftedTableau.from_text("2 1")


def test_reading_word_and_weight():
    t = ShiftedTableau.from_text("# 1 1 2' 2\n2 3'\n3")
    assert str(t.reading_word()) == "323'112'2"
    assert t.weight() == (2, 3, 2)


def test_text_rendering_marks_shift_and_inner_cells():
    t = ShiftedTableau.from_text("# # 1\n1 2")
    assert t.to_text() == "# # 1\n. 1 2"
    assert ShiftedTableau.from_text(t.to_text()) == t


@given(S.any_tableaux())
def test_json_and_text_round_trip(t):
    assert ShiftedTableau.from_json(t.to_json()) == t
    assert ShiftedTableau.from_text(t.to_text()) == t


@given(S.any_tableaux(), st.data())
def test_canonical_form_ignores_prime_on_first_occurrence(t, data):
    firsts = {}
    for cell in sorted(t.cells(), key=lambda rc: (-rc[0], rc[1])):
        firsts.setdefault(t[cell].value, cell)
    cell = data.draw(st.sampled_from(sorted(firsts.values())))
    entries = t.entries
    entries[cell] = entries[cell].toggled()
    raw = RawFilling(t.shape, entries)
    if raw.is_semistandard():
        assert raw.to_tableau(t.n) == t


@given(S.any_tableaux())
def test_sstd_inverts_std(t):
    s = std(t)
    assert s.is_standard()
    assert sstd(s, t.weight()) == t


@given(S.any_tableaux())
def test_std_preserves_relative_order(t):
    s = std(t)
    for a, b in itertools.combinations(t.cells(), 2):
        if t[a].value < t[b].value:
            assert s[a].value < s[b].value


def test_sstd_undefined_when_blocks_are_not_strips():
    assert sstd(ShiftedTableau.from_text("1 2\n3"), (3,)) is None


@pytest.mark.parametrize("shape", small_shapes(5, 4), ids=str)
def test_weight_enumeration_partitions_the_full_enumeration(shape):
    full = set(enumerate_tableaux(shape, 3))
    by_weight = set()
    for nu in itertools.product(range(shape.size + 1), repeat=3):
        by_weight |= set(enumerate_by_weight(shape, nu))
    assert by_weight == full


@given(S.standard_tableaux())
def test_chain_round_trip(t):
    assert chain_to_tableau(tableau_to_chain(t)) == t


@pytest.mark.parametrize("lam", [p for k in range(1, 8) for p in iter_strict_partitions(k)], ids=str)
def test_standard_counts_split_by_lr_coefficients(lam):
    lam = StrictPartition(lam)
    for mu_size in range(1, lam.size):
        for mu in iter_strict_partitions(mu_size):
            if not lam.contains(mu):
                continue
            total = sum(lr_coefficient(lam, mu, nu) * shifted_standard_count(nu)
                        for nu in iter_strict_partitions(lam.size - mu_size))
            assert total == linear_extensions(lam, mu)


def test_yamanouchi_is_lrs():
    y = yamanouchi((4, 2, 1))
    assert y.to_text() == "1 1 1 1\n. 2 2\n. . 3"
    assert is_lrs(y)


def test_lr_coefficient_size_mismatch_warns():
    with pytest.warns(UserWarning):
        assert lr_coefficient((3, 1), (1,), (1,)) == 0


def test_sstd_to_a_weight_with_an_empty_letter_matches_brute_force():
    shape = SkewShape.parse("2")
    (only,) = enumerate_by_weight(shape, (0, 2))
    assert std(only) == ShiftedTableau.from_text("1 2")
    assert sstd(ShiftedTableau.from_text("1 2"), (0, 2)) == only


def test_standardizing_a_primed_pair_of_ones():
    from shtab.shapes import Word

    w = Word.parse("1'1")
    assert str(w) == "11"
    same_weight = {Word(x) for x in ([Letter(1), Letter(1)], [Letter(1, True), Letter(1)])}
    assert {str(x.standardize()) for x in same_weight} == {"12"}


def test_two_components_for_a_small_skew_crystal():
    total = sum(lr_coefficient((3, 1), (1,), nu) for nu in ((3,), (2, 1)))
    assert total == 2
