import itertools
from collections import defaultdict

import pytest
from hypothesis import given
from hypothesis import strategies as st

import strategies as S
from shtab.jdt import (SlideError, SlideRecord, complement, dual_equivalent, inner_slide, iter_slides,
                       knuth_class, knuth_moves, outer_slide, rectification_orders, rectify,
                       rectify_word, replay_reverse, word_tableau)
from shtab.shapes import Letter, Word
from shtab.tableau import ShiftedTableau, semistandard_violation, std


def _is_semistandard(t):
    return semistandard_violation(t.entries) is None and set(t.cells()) == set(t.shape.cells())


@given(S.skew_tableaux())
def test_every_slide_keeps_a_semistandard_tableau(t):
    for step in iter_slides(t):
        assert _is_semistandard(step)
        assert step.weight(t.n) == t.weight(t.n)


@given(S.skew_tableaux(), st.data())
def test_inner_then_outer_slide_is_identity(t, data):
    corner = data.draw(st.sampled_from(t.shape.inner_corners()))
    slid, vacated = inner_slide(t, corner)
    back, returned = outer_slide(slid, vacated)
    assert back == t
    assert returned == corner


@given(S.skew_tableaux(), st.data())
def test_rectification_is_order_independent(t, data):
    order = data.draw(st.sampled_from(rectification_orders(t.shape.inner)))
    assert rectify(t, order)[0] == rectify(t)[0]


@given(S.skew_tableaux())
def test_replay_reverse_restores_the_tableau(t):
    straight, record = rectify(t)
    assert straight.is_straight
    assert replay_reverse(straight, record) == t
    assert SlideRecord.from_json(record.to_json()) == record


@given(S.skew_tableaux())
def test_rectification_commutes_with_standardization(t):
    assert rectify(std(t))[0] == std(rectify(t)[0])


@given(S.any_tableaux().filter(lambda t: t.shape.inner.part(1) < t.shape.outer.part(1)))
def test_complement_is_an_involution(t):
    # with an empty first row the ambient staircase would shrink
    c = complement(t)
    assert _is_semistandard(c)
    assert complement(c) == t


def test_slide_rejects_non_corner():
    t = ShiftedTableau.from_text("# # 1\n1 2")
    with pytest.raises(SlideError):
        inner_slide(t, (1, 1))


def test_word_tableau_reads_back_its_word():
    w = Word.parse("3'23'112'2")
    assert word_tableau(w).reading_word() == w


def _small_words(length, n):
    alphabet = [Letter(v, p) for v in range(1, n + 1) for p in (False, True)]
    return {Word(w) for w in itertools.product(alphabet, repeat=length)}


@pytest.mark.parametrize("length,n", [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3)])
def test_knuth_classes_are_rectification_fibres(length, n):
    fibres = defaultdict(set)
    for w in _small_words(length, n):
        fibres[rectify_word(w)].add(w)
    for fibre in fibres.values():
        assert knuth_class(next(iter(fibre))) == fibre


@given(st.lists(st.builds(Letter, st.integers(1, 3), st.booleans()), min_size=1, max_size=6))
def test_knuth_moves_preserve_rectification(letters):
    target = rectify_word(letters)
    for v in knuth_moves(letters):
        assert rectify_word(v) == target


@given(S.skew_tableaux(max_cells=6, n=6, width=4).filter(lambda t: t.is_standard()))
def test_standard_skew_tableau_is_dual_equivalent_to_itself(t):
    assert dual_equivalent(t, t)


def test_dual_equivalence_distinguishes_slide_shapes():
    a = ShiftedTableau.from_text("# # 1\n2")
    b = ShiftedTableau.from_text("# # 2\n1")
    assert rectify(a)[1].cells != rectify(b)[1].cells
    assert not dual_equivalent(a, b)
