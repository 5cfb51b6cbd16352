"""Evacuation, reversal and the involutions built from them."""

from __future__ import annotations

from .jdt import complement, rectify, replay_reverse, row_reading_filler
from .shapes import Letter
from .switching import _switch_all, sw
from .tableau import ShiftedTableau, TableauError


def _require_straight(tab: ShiftedTableau, what: str) -> None:
    if not tab.is_straight:
        raise TableauError(f"{what} needs a straight shape, got {tab.shape}")


def evac(tab: ShiftedTableau, route: str = "slides") -> ShiftedTableau:
    """Evacuation of a straight tableau.

    ``route="slides"`` rectifies the complement; ``route="switching"`` runs the
    negate-and-switch algorithm. Both give the same answer.
    """
    _require_straight(tab, "evacuation")
    if route == "slides":
        return rectify(complement(tab))[0]
    if route == "switching":
        return tilde_evac(tab)
    raise ValueError(f"unknown route {route!r}")


def _negate_and_switch(ent: dict, i: int, j: int) -> None:
    """In place: reverse letters ``i..j`` by switching each one, once negated, past the larger ones."""
    for m in range(i, j + 1):
        a = set()
        for cell, x in ent.items():
            if x.value == m:
                ent[cell] = Letter(-m, x.primed)
                a.add(cell)
        for k in range(m + 1, j + 1):
            b = {cell for cell, x in ent.items() if x.value == k}
            _switch_all(ent, a, b)
    for cell, x in ent.items():
        if x.value < 0:
            ent[cell] = Letter(i + j + x.value, x.primed)


def tilde_evac_ij(tab: ShiftedTableau, i: int, j: int) -> ShiftedTableau:
    """The switching evacuation applied to the letters ``i..j`` only (any shape)."""
    if not 1 <= i <= j:
        raise ValueError(f"bad range {i}..{j}")
    ent = tab.entries
    _negate_and_switch(ent, i, j)
    return ShiftedTableau(tab.shape, ent, max(tab.n, j))


def tilde_evac(tab: ShiftedTableau) -> ShiftedTableau:
    return tilde_evac_ij(tab, 1, tab.n) if tab.n else tab


def tilde_evac_k(tab: ShiftedTableau, k: int) -> ShiftedTableau:
    return tilde_evac_ij(tab, 1, k)


def _merge(tab: ShiftedTableau, part: ShiftedTableau) -> ShiftedTableau:
    ent = tab.entries
    ent.update(part.entries)
    return ShiftedTableau(tab.shape, ent, tab.n)


def _shift(tab: ShiftedTableau, offset: int, n: int) -> ShiftedTableau:
    return tab.relabel(lambda x: Letter(x.value + offset, x.primed), n)


def evac_k(tab: ShiftedTableau, k: int) -> ShiftedTableau:
    """Evacuate the letters ``1..k`` of a straight tableau, keep the rest."""
    _require_straight(tab, "partial evacuation")
    return _merge(tab, evac(tab.restrict(1, k).with_n(k)))


def reversal(tab: ShiftedTableau) -> ShiftedTableau:
    """Rectify, evacuate, then undo the rectification slides in reverse."""
    straight, record = rectify(tab)
    return replay_reverse(evac(straight), record)


def reversal_switching(tab: ShiftedTableau, filler: ShiftedTableau | None = None) -> ShiftedTableau:
    """Reversal through two tableau switchings, using any standard filling of the inner shape."""
    if filler is None:
        filler = row_reading_filler(tab.shape.inner)
    straight, moved_filler = sw(filler, tab)
    back, result = sw(evac(straight), moved_filler)
    if back != filler:
        raise AssertionError("switching did not return the filler to the inner shape")
    return result


def eta(tab: ShiftedTableau) -> ShiftedTableau:
    """Evacuation on straight shapes, reversal on skew shapes."""
    return evac(tab) if tab.is_straight else reversal(tab)


def eta_ij(tab: ShiftedTableau, i: int, j: int) -> ShiftedTableau:
    """Apply ``eta`` to the subtableau of letters ``i..j``, keep the rest."""
    if not 1 <= i <= j:
        raise ValueError(f"bad range {i}..{j}")
    if i == j:
        return tab
    part = _shift(tab.restrict(i, j), 1 - i, j - i + 1)
    return _merge(tab, _shift(eta(part), i - 1, tab.n))


def sigma(tab: ShiftedTableau, i: int) -> ShiftedTableau:
    """The shifted Bender-Knuth involution on letters ``i, i+1``."""
    return eta_ij(tab, i, i + 1)
