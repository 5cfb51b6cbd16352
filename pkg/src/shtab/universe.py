"""Finite families of shapes and tableaux used by the exhaustive checks."""

from __future__ import annotations

from typing import Iterator

from .shapes import SkewShape, StrictPartition, iter_strict_partitions
from .tableau import ShiftedTableau, enumerate_tableaux, standard_tableaux


def straight_shapes(max_cells: int, min_cells: int = 1) -> Iterator[SkewShape]:
    for size in range(min_cells, max_cells + 1):
        for lam in iter_strict_partitions(size):
            yield SkewShape(lam)


def _sub_partitions(lam: StrictPartition) -> Iterator[StrictPartition]:
    def rec(row: int, cap: int) -> Iterator[tuple[int, ...]]:
        if row > len(lam):
            yield ()
            return
        yield ()
        for p in range(min(lam.part(row), cap), 0, -1):
            for tail in rec(row + 1, p - 1):
                yield (p,) + tail

    for parts in rec(1, lam.part(1)):
        yield StrictPartition(parts)


def skew_shapes(max_cells: int, max_width: int, min_cells: int = 1) -> Iterator[SkewShape]:
    """Proper skew shapes (non-empty inner shape) with first outer part at most ``max_width``."""
    for size in range(1, max_width * (max_width + 1) // 2 + 1):
        for lam in iter_strict_partitions(size, max_width):
            for mu in _sub_partitions(lam):
                if mu and min_cells <= lam.size - mu.size <= max_cells:
                    yield SkewShape(lam, mu)


def tableaux(shapes, n: int) -> list[ShiftedTableau]:
    out: list[ShiftedTableau] = []
    for shape in shapes:
        out.extend(enumerate_tableaux(shape, n))
    return out


def straight_universe(max_cells: int, n: int) -> list[ShiftedTableau]:
    return tableaux(straight_shapes(max_cells), n)


def skew_universe(max_cells: int, n: int, max_width: int) -> list[ShiftedTableau]:
    return tableaux(skew_shapes(max_cells, max_width), n)


def standard_universe(max_cells: int, skew_width: int | None = None) -> list[ShiftedTableau]:
    shapes = list(straight_shapes(max_cells))
    if skew_width:
        shapes += list(skew_shapes(max_cells, skew_width))
    out: list[ShiftedTableau] = []
    for shape in shapes:
        out.extend(standard_tableaux(shape))
    return out
