"""Strict partitions, shifted skew shapes, the primed alphabet, words and permutations.

Cells are ``(row, col)`` pairs, 1-based, English notation; row ``r`` of a
shifted shape starts in column ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

Cell = tuple[int, int]


class ShapeError(ValueError):
    """Raised for malformed partitions, shapes, letters or words."""


class StrictPartition(tuple):
    """A strictly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()) -> "StrictPartition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p <= 0 for p in parts):
            raise ShapeError(f"parts must be positive: {parts}")
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise ShapeError(f"parts must be strictly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "StrictPartition":
        text = text.strip()
        if text in ("", "0", "-", "∅"):
            return cls()
        try:
            return cls(int(p) for p in text.split(","))
        except ValueError as exc:
            raise ShapeError(f"cannot parse partition {text!r}") from exc

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self) -> str:
        return f"StrictPartition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, row: int) -> int:
        """1-based part, 0 beyond the length."""
        return self[row - 1] if 1 <= row <= len(self) else 0

    def cells(self) -> list[Cell]:
        return [(r, c) for r, p in enumerate(self, 1) for c in range(r, r + p)]

    def contains(self, other: Sequence[int]) -> bool:
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def addable_rows(self) -> list[int]:
        return [r for r in range(1, len(self) + 2)
                if r == 1 or self.part(r - 1) > self.part(r) + 1]

    def removable_rows(self) -> list[int]:
        return [r for r in range(1, len(self) + 1)
                if r == len(self) or self.part(r) - 1 > self.part(r + 1)]

    def add_box(self, row: int) -> "StrictPartition":
        parts = list(self) + [0]
        parts[row - 1] += 1
        return StrictPartition(parts)

    def remove_box(self, row: int) -> "StrictPartition":
        parts = list(self)
        parts[row - 1] -= 1
        return StrictPartition(parts)

    def row_of_cell(self, cell: Cell) -> int | None:
        """Row index if ``cell`` is an addable corner of this partition."""
        r, c = cell
        if r in self.addable_rows() and c == r + self.part(r):
            return r
        return None


def complement(shape: Sequence[int], width: int | None = None) -> StrictPartition:
    """Parts of ``{1..width}`` missing from ``shape`` (width defaults to the first part)."""
    if width is None:
        width = shape[0] if shape else 0
    present = set(shape)
    if any(p > width for p in present):
        raise ShapeError(f"{tuple(shape)} does not fit in the staircase of width {width}")
    return StrictPartition(p for p in range(width, 0, -1) if p not in present)


def staircase(width: int) -> StrictPartition:
    return StrictPartition(range(width, 0, -1))


@dataclass(frozen=True)
class SkewShape:
    outer: StrictPartition
    inner: StrictPartition = StrictPartition()

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", StrictPartition(self.outer))
        object.__setattr__(self, "inner", StrictPartition(self.inner))
        if not self.outer.contains(self.inner):
            raise ShapeError(f"{self.inner} is not contained in {self.outer}")

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        outer, _, inner = text.partition("/")
        return cls(StrictPartition.parse(outer), StrictPartition.parse(inner))

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}" if self.inner else str(self.outer)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def row_range(self, row: int) -> range:
        return range(row + self.inner.part(row), row + self.outer.part(row))

    def cells(self) -> list[Cell]:
        return [(r, c) for r in range(1, len(self.outer) + 1) for c in self.row_range(r)]

    def __contains__(self, cell: Cell) -> bool:
        r, c = cell
        return r >= 1 and c in self.row_range(r)

    def inner_corners(self) -> list[Cell]:
        """Cells of the inner shape whose removal leaves a strict partition."""
        return [(r, r + self.inner.part(r) - 1) for r in self.inner.removable_rows()]

    def outer_corners(self) -> list[Cell]:
        """Cells outside the outer shape whose addition leaves a strict partition."""
        return [(r, r + self.outer.part(r)) for r in self.outer.addable_rows()]

    @classmethod
    def from_cells(cls, cells: Iterable[Cell], inner: Sequence[int] = ()) -> "SkewShape":
        inner = StrictPartition(inner)
        counts: dict[int, int] = {}
        for r, _ in cells:
            counts[r] = counts.get(r, 0) + 1
        rows = max(list(counts) + [len(inner), 0])
        outer = StrictPartition(inner.part(r) + counts.get(r, 0) for r in range(1, rows + 1))
        shape = cls(outer, inner)
        if set(shape.cells()) != set(cells):
            raise ShapeError("cells do not form a skew shape over the given inner shape")
        return shape


def is_border_strip(cells: Iterable[Cell]) -> bool:
    """No two cells on a common diagonal step ``(r, c), (r+1, c+1)``."""
    cells = set(cells)
    return not any((r + 1, c + 1) in cells for r, c in cells)


def is_double_border_strip(cells: Iterable[Cell]) -> bool:
    """No three cells ``(r, c), (r+1, c+1), (r+2, c+2)``."""
    cells = set(cells)
    return not any((r + 1, c + 1) in cells and (r + 2, c + 2) in cells for r, c in cells)


class Letter(NamedTuple):
    """A letter of the primed alphabet ``1' < 1 < 2' < 2 < ...``."""

    value: int
    primed: bool = False

    @property
    def rank(self) -> int:
        return 2 * self.value - self.primed

    def __lt__(self, other):  # type: ignore[override]
        return self.rank < other.rank

    def __le__(self, other):  # type: ignore[override]
        return self.rank <= other.rank

    def __gt__(self, other):  # type: ignore[override]
        return self.rank > other.rank

    def __ge__(self, other):  # type: ignore[override]
        return self.rank >= other.rank

    def __str__(self) -> str:
        return f"{self.value}'" if self.primed else str(self.value)

    def unprimed(self) -> "Letter":
        return Letter(self.value, False)

    def toggled(self) -> "Letter":
        return Letter(self.value, not self.primed)

    @classmethod
    def parse(cls, text: str) -> "Letter":
        text = text.strip()
        primed = text.endswith("'")
        body = text[:-1] if primed else text
        if not body.lstrip("-").isdigit():
            raise ShapeError(f"bad letter {text!r}")
        return cls(int(body), primed)


def parse_letters(text: str) -> list[Letter]:
    """Parse ``"323'112'2"`` (single digits) or a space separated list."""
    text = text.strip()
    if " " in text:
        return [Letter.parse(tok) for tok in text.split()]
    out: list[Letter] = []
    for ch in text:
        if ch == "'":
            if not out or out[-1].primed:
                raise ShapeError(f"misplaced prime in {text!r}")
            out[-1] = out[-1].toggled()
        elif ch.isdigit():
            out.append(Letter(int(ch)))
        else:
            raise ShapeError(f"bad character {ch!r} in word {text!r}")
    return out


def canonical_letters(letters: Sequence[Letter]) -> list[Letter]:
    """Unprime the leftmost occurrence of every value."""
    seen: set[int] = set()
    out = []
    for x in letters:
        if x.value not in seen:
            seen.add(x.value)
            x = Letter(x.value, False)
        out.append(x)
    return out


class Word(tuple):
    """A word in the primed alphabet, stored in canonical form."""

    def __new__(cls, letters: Iterable[Letter] = ()) -> "Word":
        return super().__new__(cls, canonical_letters([Letter(*x) for x in letters]))

    @classmethod
    def parse(cls, text: str) -> "Word":
        return cls(parse_letters(text))

    def __str__(self) -> str:
        wide = any(x.value > 9 for x in self)
        return (" " if wide else "").join(map(str, self))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def weight(self, n: int | None = None) -> tuple[int, ...]:
        return weight_of(self, n)

    def standardize(self) -> "Word":
        return Word(Letter(v) for v in standardization_labels(self))


def weight_of(letters: Iterable[Letter], n: int | None = None) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    for x in letters:
        counts[x.value] = counts.get(x.value, 0) + 1
    top = max(counts, default=0) if n is None else n
    if counts and max(counts) > top:
        raise ShapeError(f"letter {max(counts)} exceeds alphabet bound {top}")
    return tuple(counts.get(i, 0) for i in range(1, top + 1))


def standardization_labels(letters: Sequence[Letter]) -> list[int]:
    """Labels 1..len: by value, primed copies right to left, then unprimed left to right."""
    order = sorted(
        range(len(letters)),
        key=lambda k: (letters[k].value, not letters[k].primed,
                       -k if letters[k].primed else k),
    )
    labels = [0] * len(letters)
    for label, k in enumerate(order, 1):
        labels[k] = label
    return labels


class Permutation:
    """A permutation of ``1..n``, stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ShapeError(f"not a permutation: {images}")
        self.images = images

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1] if 1 <= k <= len(self.images) else k

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition, ``(self * other)(k) = self(other(k))``."""
        n = max(self.n, other.n)
        return Permutation(self(other(k)) for k in range(1, n + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for k, v in enumerate(self.images, 1):
            inv[v - 1] = k
        return Permutation(inv)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        n = max(self.n, other.n)
        return all(self(k) == other(k) for k in range(1, n + 1))

    def __hash__(self) -> int:
        images = list(self.images)
        while images and images[-1] == len(images):
            images.pop()
        return hash(tuple(images))

    def __repr__(self) -> str:
        return f"Permutation({self.images})"

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def reverse_range(cls, i: int, j: int, n: int) -> "Permutation":
        """Longest permutation of ``[i..j]``, fixing everything else."""
        n = max(n, j)
        return cls(i + j - k if i <= k <= j else k for k in range(1, n + 1))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        return cls.reverse_range(i, i + 1, n)

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls.reverse_range(1, n, n)

    @classmethod
    def cycle_up(cls, i: int, n: int) -> "Permutation":
        """The cycle ``1 -> i+1 -> i -> ... -> 2 -> 1``."""
        n = max(n, i + 1)
        return cls([i + 1] + list(range(1, i + 1)) + list(range(i + 2, n + 1)))

    def act_letter(self, x: Letter) -> Letter:
        return Letter(self(x.value), x.primed)

    def act_vector(self, vec: Sequence[int]) -> tuple[int, ...]:
        """``out[k] = vec[self^-1(k)]``: the entry at position k moves to self(k)."""
        size = max(len(vec), self.n)
        padded = list(vec) + [0] * (size - len(vec))
        out = [0] * size
        for k, x in enumerate(padded, 1):
            out[self(k) - 1] = x
        return tuple(out)

    def act_word(self, word: Sequence[Letter]) -> Word:
        return Word(self.act_letter(x) for x in word)


def iter_strict_partitions(size: int, max_part: int | None = None) -> Iterator[StrictPartition]:
    """All strict partitions of ``size``, largest first part first."""
    if max_part is None:
        max_part = size

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p - 1):
                yield (p,) + tail

    for parts in rec(size, max_part):
        yield StrictPartition(parts)
