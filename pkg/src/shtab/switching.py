"""Shifted tableau switching on perforated pairs, pairs of tableaux, and infusion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .jdt import _inner_slide
from .shapes import Cell, Letter, SkewShape, is_double_border_strip
from .tableau import RawFilling, ShiftedTableau, TableauError, _parse_rows, _render, sstd, std


def _pick_box(fill: Mapping[Cell, Letter], a: set[Cell], b: set[Cell]) -> Cell | None:
    """Rightmost unprimed a-box next to a b-box, else the bottommost primed one."""
    best = None
    best_primed = None
    for p in a:
        r, c = p
        if (r, c + 1) in b or (r + 1, c) in b:
            if fill[p].primed:
                if best_primed is None or p > best_primed:
                    best_primed = p
            elif best is None or (c, r) > (best[1], best[0]):
                best = p
    return best if best is not None else best_primed


def _move(fill, a, b, src_a: Cell, src_b: Cell) -> None:
    fill[src_a], fill[src_b] = fill[src_b], fill[src_a]
    a.discard(src_a)
    b.discard(src_b)
    a.add(src_b)
    b.add(src_a)


def _switch(fill: dict[Cell, Letter], a: set[Cell], b: set[Cell], p: Cell) -> str:
    """Apply the switch at the a-box ``p`` in place and return its name."""
    r, c = p
    east, south = (r, c + 1), (r + 1, c)
    east_b, south_b = east in b, south in b
    if r == c:
        diag = (r + 1, r + 1)
        if east_b and fill[east].primed and diag in b:
            letter_a, letter_e, letter_d = fill[p], fill[east], fill[diag]
            fill[p] = letter_d
            fill[east] = Letter(letter_e.value)
            fill[diag] = letter_a
            a.discard(p)
            a.add(diag)
            b.discard(diag)
            b.add(p)
            return "S3"
        _move(fill, a, b, p, east)
        return "S1"
    corner = (r, r)
    if c == r + 1 and south_b and corner in a and not (east_b and fill[east].primed):
        letter_corner, letter_p, letter_s = fill[corner], fill[p], fill[south]
        fill[corner] = letter_s
        fill[p] = Letter(letter_p.value, True)
        fill[south] = letter_corner
        a.discard(corner)
        a.add(south)
        b.discard(south)
        b.add(corner)
        return "S7" if east_b else "S4"
    if east_b and south_b:
        if fill[east].primed:
            _move(fill, a, b, p, east)
            return "S5"
        _move(fill, a, b, p, south)
        return "S6"
    if east_b:
        _move(fill, a, b, p, east)
        return "S1"
    if south_b:
        _move(fill, a, b, p, south)
        return "S2"
    raise TableauError(f"no b-box east or south of {p}")


def _switch_all(fill: dict[Cell, Letter], a: set[Cell], b: set[Cell]) -> list[str]:
    names = []
    while (p := _pick_box(fill, a, b)) is not None:
        names.append(_switch(fill, a, b, p))
    return names


@dataclass
class PerforatedPair:
    """Two interleaved one-letter fillings; ``a`` and ``b`` map cells to primedness."""

    shape: SkewShape
    a: dict[Cell, bool]
    b: dict[Cell, bool]
    value_a: int = 1
    value_b: int = 2

    @classmethod
    def from_text(cls, text: str, value_a: int = 1, value_b: int = 2) -> "PerforatedPair":
        shape, ent = _parse_rows(text)
        a = {c: x.primed for c, x in ent.items() if x.value == value_a}
        b = {c: x.primed for c, x in ent.items() if x.value == value_b}
        if len(a) + len(b) != len(ent):
            raise TableauError(f"only letters {value_a} and {value_b} are allowed")
        return cls(shape, a, b, value_a, value_b)

    def filling(self) -> RawFilling:
        ent = {c: Letter(self.value_a, p) for c, p in self.a.items()}
        ent.update({c: Letter(self.value_b, p) for c, p in self.b.items()})
        return RawFilling(self.shape, ent)

    def to_text(self, bracket_a: bool = False) -> str:
        """Overlaid text form; with ``bracket_a`` the a-entries are shown as ``[1']``."""
        if not bracket_a:
            return self.filling().to_text()
        ent = {c: (f"[{x}]" if c in self.a else str(x)) for c, x in self.filling().items()}
        return _render(self.shape, ent)

    @classmethod
    def from_tableau(cls, tab: ShiftedTableau | RawFilling, value_a: int, value_b: int) -> "PerforatedPair":
        """The pair formed by the letters ``value_a`` and ``value_b`` of a filling."""
        if isinstance(tab, ShiftedTableau):
            part = tab.restrict(min(value_a, value_b), max(value_a, value_b))
        else:
            part = tab
        ent = {c: x for c, x in part.items() if x.value in (value_a, value_b)}
        shape = SkewShape.from_cells(ent, part.shape.inner) if isinstance(tab, ShiftedTableau) else part.shape
        return cls(shape, {c: x.primed for c, x in ent.items() if x.value == value_a},
                   {c: x.primed for c, x in ent.items() if x.value == value_b}, value_a, value_b)

    def problems(self) -> list[str]:
        out = []
        if set(self.a) | set(self.b) != set(self.shape.cells()) or set(self.a) & set(self.b):
            out.append("a and b do not partition the shape")
        if not is_double_border_strip(self.shape.cells()):
            out.append("shape is not a double border strip")
        for name, part in (("a", self.a), ("b", self.b)):
            for (r, c), p in part.items():
                if not p and part.get((r + 1, c)) is False:
                    out.append(f"two unprimed {name} stacked in column {c}")
                if p and part.get((r, c + 1)) is True:
                    out.append(f"two primed {name} side by side in row {r}")
            if sum(1 for r, c in part if r == c) > 1:
                out.append(f"more than one {name} on the diagonal")
            unprimed = [cell for cell, p in part.items() if not p]
            for (r, c), p in part.items():
                if p and any(r >= r2 and c >= c2 for r2, c2 in unprimed):
                    out.append(f"primed {name} south-east of an unprimed one at {(r, c)}")
        return out

    def is_fully_switched(self) -> bool:
        return not any((r, c + 1) in self.b or (r + 1, c) in self.b for r, c in self.a)

    def _state(self):
        fill = {c: Letter(self.value_a, p) for c, p in self.a.items()}
        fill.update({c: Letter(self.value_b, p) for c, p in self.b.items()})
        return fill, set(self.a), set(self.b)

    def _from_state(self, fill, a, b) -> "PerforatedPair":
        return PerforatedPair(self.shape, {c: fill[c].primed for c in a},
                              {c: fill[c].primed for c in b}, self.value_a, self.value_b)


def switch_step(pair: PerforatedPair, box: Cell | None = None) -> tuple[PerforatedPair, str]:
    """One switch; ``box`` overrides the a-box selection rule."""
    fill, a, b = pair._state()
    if box is None:
        box = _pick_box(fill, a, b)
        if box is None:
            raise TableauError("pair is already fully switched")
    elif box not in a:
        raise TableauError(f"{box} is not an a-box")
    name = _switch(fill, a, b, box)
    return pair._from_state(fill, a, b), name


def switching_process(pair: PerforatedPair) -> list[tuple[str, PerforatedPair]]:
    """Every switch applied until the pair is fully switched."""
    trace = []
    while not pair.is_fully_switched():
        pair, name = switch_step(pair)
        trace.append((name, pair))
    return trace


def sp(pair: PerforatedPair) -> tuple[dict[Cell, Letter], dict[Cell, Letter]]:
    """Fully switch; return the b-part then the a-part."""
    fill, a, b = pair._state()
    _switch_all(fill, a, b)
    return {c: fill[c] for c in b}, {c: fill[c] for c in a}


def sw_raw(s: ShiftedTableau | RawFilling, t: ShiftedTableau | RawFilling) -> tuple[RawFilling, RawFilling]:
    """Switching on fillings as given, without passing to canonical form first."""
    if t.shape.inner != s.shape.outer:
        raise TableauError(f"{t.shape} does not extend {s.shape}")
    fill = dict(s.entries)
    fill.update(t.entries)
    s_cells, t_cells = set(s.cells()), set(t.cells())
    s_values = sorted({x.value for x in s.entries.values()}, reverse=True)
    t_values = sorted({x.value for x in t.entries.values()})
    for i in s_values:
        for j in t_values:
            a = {c for c in s_cells if fill[c].value == i}
            b = {c for c in t_cells if fill[c].value == j}
            s_cells -= a
            t_cells -= b
            _switch_all(fill, a, b)
            s_cells |= a
            t_cells |= b
    inner = s.shape.inner
    mid = SkewShape.from_cells(t_cells, inner).outer
    return (RawFilling(SkewShape(mid, inner), {c: fill[c] for c in t_cells}),
            RawFilling(SkewShape(t.shape.outer, mid), {c: fill[c] for c in s_cells}))


def sw(s: ShiftedTableau, t: ShiftedTableau) -> tuple[ShiftedTableau, ShiftedTableau]:
    """Switch ``s`` through ``t`` (``t`` extends ``s``); return the moved ``t`` then the moved ``s``."""
    first, second = sw_raw(s, t)
    return first.to_tableau(t.n), second.to_tableau(s.n)


def _as_entries(tab) -> tuple[SkewShape, dict[Cell, Letter]]:
    return tab.shape, tab.entries


def sp_ij(tab: ShiftedTableau | RawFilling, i: int, j: int) -> RawFilling:
    """Switch the i-letters outward through the j-letters, other letters untouched."""
    shape, fill = _as_entries(tab)
    a = {c for c, x in fill.items() if x.value == i}
    b = {c for c, x in fill.items() if x.value == j}
    _switch_all(fill, a, b)
    return RawFilling(shape, fill)


def sw_given(tab: ShiftedTableau | RawFilling, k: int, targets: Sequence[int]) -> RawFilling:
    """Switch the k-letters through each of ``targets`` in the given order."""
    for j in targets:
        tab = sp_ij(tab, k, j)
    return tab


def infusion(s: ShiftedTableau, t: ShiftedTableau) -> tuple[ShiftedTableau, ShiftedTableau]:
    """Slide ``t`` into the cells of ``s``, largest entry first, recording vacated cells."""
    if not (s.is_standard() and t.is_standard()):
        raise TableauError("infusion takes standard tableaux")
    if t.shape.inner != s.shape.outer:
        raise TableauError(f"{t.shape} does not extend {s.shape}")
    ent = t.entries
    placed = {}
    outer, inner = t.shape.outer, t.shape.inner
    for cell, x in sorted(s.items(), key=lambda kv: -kv[1].value):
        vacated = _inner_slide(ent, cell)
        placed[vacated] = x
        inner = inner.remove_box(cell[0])
        outer = outer.remove_box(vacated[0])
    first = ShiftedTableau(SkewShape(outer, s.shape.inner), ent, t.n)
    second = ShiftedTableau(SkewShape(t.shape.outer, outer), placed, s.n)
    return first, second


def sw_via_infusion(s: ShiftedTableau, t: ShiftedTableau) -> tuple[ShiftedTableau | None, ShiftedTableau | None]:
    """Standardize both, infuse, then semistandardize back to the original weights."""
    first, second = infusion(std(s), std(t))
    return sstd(first, t.weight()), sstd(second, s.weight())
