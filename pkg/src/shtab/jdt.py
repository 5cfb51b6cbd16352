"""Shifted jeu de taquin, rectification, complementation and Knuth moves."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .shapes import Cell, Letter, SkewShape, StrictPartition, Word, complement as shape_complement
from .tableau import ShiftedTableau, canonical_entries, standard_tableaux, standardization_labels


class SlideError(ValueError):
    """Raised when a slide is requested at a cell that is not a corner."""


def _inner_slide(ent: dict[Cell, Letter], hole: Cell) -> Cell:
    """Slide into ``hole`` in place; return the vacated outer cell."""
    primed_into_diagonal = None
    while True:
        r, c = hole
        right = ent.get((r, c + 1))
        below = ent.get((r + 1, c))
        if right is None and below is None:
            return hole
        if below is None or (right is not None and (right < below or (right == below and right.primed))):
            ent[hole] = right
            del ent[(r, c + 1)]
            primed_into_diagonal = right.value if (r == c and right.primed) else None
            hole = (r, c + 1)
        else:
            ent[hole] = below
            del ent[(r + 1, c)]
            if primed_into_diagonal == below.value and c == r + 1:
                # a' entered the diagonal and the same letter rose beside it
                ent[(r, r)] = Letter(below.value)
                ent[hole] = Letter(below.value)
            primed_into_diagonal = None
            hole = (r + 1, c)


def _outer_slide(ent: dict[Cell, Letter], hole: Cell) -> Cell:
    """Slide into the outer cell ``hole`` in place; return the vacated inner cell."""
    dropped_onto_diagonal = None
    while True:
        r, c = hole
        left = ent.get((r, c - 1))
        above = ent.get((r - 1, c))
        if left is None and above is None:
            return hole
        if above is None or (left is not None and (left > above or (left == above and left.primed))):
            moved = left
            if dropped_onto_diagonal == left.value and c - 1 == r:
                moved = Letter(left.value, True)
            ent[hole] = moved
            del ent[(r, c - 1)]
            dropped_onto_diagonal = None
            hole = (r, c - 1)
        else:
            ent[hole] = above
            del ent[(r - 1, c)]
            dropped_onto_diagonal = above.value if r == c else None
            hole = (r - 1, c)


def inner_slide(tab: ShiftedTableau, corner: Cell) -> tuple[ShiftedTableau, Cell]:
    if corner not in tab.shape.inner_corners():
        raise SlideError(f"{corner} is not an inner corner of {tab.shape}")
    ent = tab.entries
    vacated = _inner_slide(ent, corner)
    shape = SkewShape(tab.shape.outer.remove_box(vacated[0]), tab.shape.inner.remove_box(corner[0]))
    return ShiftedTableau(shape, canonical_entries(ent), tab.n, check=False), vacated


def outer_slide(tab: ShiftedTableau, corner: Cell) -> tuple[ShiftedTableau, Cell]:
    if corner not in tab.shape.outer_corners():
        raise SlideError(f"{corner} is not an outer corner of {tab.shape}")
    ent = tab.entries
    vacated = _outer_slide(ent, corner)
    shape = SkewShape(tab.shape.outer.add_box(corner[0]), tab.shape.inner.add_box(vacated[0]))
    return ShiftedTableau(shape, canonical_entries(ent), tab.n, check=False), vacated


@dataclass
class SlideRecord:
    """Cells vacated by a sequence of slides, with the kind of slide that vacated each."""

    steps: list[tuple[Cell, str]] = field(default_factory=list)

    def to_json(self) -> list:
        return [[r, c, kind] for (r, c), kind in self.steps]

    @classmethod
    def from_json(cls, data: Iterable) -> "SlideRecord":
        return cls([((int(r), int(c)), str(kind)) for r, c, kind in data])

    @property
    def cells(self) -> list[Cell]:
        return [cell for cell, _ in self.steps]

    def __len__(self) -> int:
        return len(self.steps)


def row_reading_filler(shape: Sequence[int]) -> ShiftedTableau:
    """The standard filling of a straight shape numbered row by row."""
    cells = StrictPartition(shape).cells()
    return ShiftedTableau(SkewShape(StrictPartition(shape)),
                          {cell: Letter(k) for k, cell in enumerate(cells, 1)}, len(cells))


def _slide_order(tab: ShiftedTableau, order: ShiftedTableau | None) -> list[Cell]:
    if order is None:
        order = row_reading_filler(tab.shape.inner)
    if order.shape != SkewShape(tab.shape.inner) or not order.is_standard():
        raise SlideError("rectification order must be a standard tableau of the inner shape")
    return [cell for cell, _ in sorted(order.items(), key=lambda kv: -kv[1].value)]


def rectify(tab: ShiftedTableau, order: ShiftedTableau | None = None) -> tuple[ShiftedTableau, SlideRecord]:
    """Inner slides into the inner shape, largest entry of ``order`` first."""
    ent = tab.entries
    inner = tab.shape.inner
    outer = tab.shape.outer
    record = SlideRecord()
    for corner in _slide_order(tab, order):
        if corner not in SkewShape(outer, inner).inner_corners():
            raise SlideError(f"{corner} is not an inner corner when its turn comes")
        vacated = _inner_slide(ent, corner)
        ent = canonical_entries(ent)
        inner = inner.remove_box(corner[0])
        outer = outer.remove_box(vacated[0])
        record.steps.append((vacated, "inner"))
    return ShiftedTableau(SkewShape(outer, inner), ent, tab.n, check=False), record


def replay_reverse(tab: ShiftedTableau, record: SlideRecord) -> ShiftedTableau:
    """Undo-style replay: opposite slides at the recorded cells, last first."""
    for cell, kind in reversed(record.steps):
        tab = (outer_slide if kind == "inner" else inner_slide)(tab, cell)[0]
    return tab


def shape_trace(tab: ShiftedTableau, order: ShiftedTableau | None = None) -> list[Cell]:
    return rectify(tab, order)[1].cells


def complement(tab: ShiftedTableau, n: int | None = None) -> ShiftedTableau:
    """Reflect in the anti-diagonal of the ambient staircase and reverse the alphabet."""
    n = tab.n if n is None else n
    width = tab.shape.outer.part(1)
    ent = {}
    for (i, j), x in tab.items():
        ent[(width - j + 1, width - i + 1)] = Letter(n + 1 - x.value, not x.primed)
    shape = SkewShape(shape_complement(tab.shape.inner, width), shape_complement(tab.shape.outer, width))
    return ShiftedTableau(shape, ent, n)


def word_tableau(word: Sequence[Letter]) -> ShiftedTableau:
    """A skew tableau whose reading word is ``word``, one isolated cell per row."""
    k = len(word)
    outer = [2 * (k - r) + 1 for r in range(1, k + 1)]
    inner = [p - 1 for p in outer]
    ent = {(r, 2 * k - r): Letter(*word[k - r]) for r in range(1, k + 1)}
    n = max((x.value for x in word), default=0)
    return ShiftedTableau(SkewShape(StrictPartition(outer), StrictPartition(inner)), ent, n)


def rectify_word(word: Sequence[Letter]) -> ShiftedTableau:
    return rectify(word_tableau(word))[0]


def knuth_moves(word: Sequence[Letter]) -> list[Word]:
    """Words one elementary shifted Knuth move away from ``word``."""
    w = list(Word(word))
    labels = standardization_labels(w)
    out: set[Word] = set()
    for p in range(len(w) - 2):
        x, y, z = labels[p], labels[p + 1], labels[p + 2]
        if min(y, z) < x < max(y, z):
            out.add(Word(w[:p + 1] + [w[p + 2], w[p + 1]] + w[p + 3:]))
        if min(x, y) < z < max(x, y):
            out.add(Word(w[:p] + [w[p + 1], w[p]] + w[p + 2:]))
    if len(w) >= 2:
        out.add(Word([w[1], w[0]] + w[2:]))
        if w[0].value == w[1].value:
            out.add(Word([w[0], w[1].toggled()] + w[2:]))
    out.discard(Word(w))
    return sorted(out, key=lambda u: [x.rank for x in u])


def knuth_class(word: Sequence[Letter]) -> set[Word]:
    start = Word(word)
    seen = {start}
    todo = [start]
    while todo:
        for v in knuth_moves(todo.pop()):
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


def knuth_equivalent(u: Sequence[Letter], v: Sequence[Letter]) -> bool:
    """Equal rectifications (equivalently, connected by Knuth moves)."""
    return rectify_word(u) == rectify_word(v)


def rectification_orders(inner: Sequence[int]) -> list[ShiftedTableau]:
    return standard_tableaux(SkewShape(StrictPartition(inner)))


def dual_equivalent(s: ShiftedTableau, t: ShiftedTableau, max_size: int = 8) -> bool:
    """Same shape, and the same vacated cells under every rectification order."""
    if s.shape != t.shape:
        return False
    if s.shape.inner.size > max_size:
        raise ValueError(f"inner shape larger than {max_size}; exhaustive check refused")
    return all(shape_trace(s, u) == shape_trace(t, u) for u in rectification_orders(s.shape.inner))


def iter_slides(tab: ShiftedTableau, order: ShiftedTableau | None = None) -> Iterator[ShiftedTableau]:
    """Every intermediate tableau of a rectification, the input first."""
    yield tab
    for corner in _slide_order(tab, order):
        tab = inner_slide(tab, corner)[0]
        yield tab
