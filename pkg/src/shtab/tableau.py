"""Shifted semistandard tableaux, raw fillings, (semi)standardization and enumeration."""

from __future__ import annotations

import json
import warnings
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .shapes import (
    Cell,
    Letter,
    ShapeError,
    SkewShape,
    StrictPartition,
    Word,
    standardization_labels,
    weight_of,
)


class TableauError(ValueError):
    """Raised when a filling violates the tableau rules it was asked to satisfy."""


def reading_cells(cells: Iterable[Cell]) -> list[Cell]:
    """Rows from bottom to top, each row left to right."""
    return sorted(cells, key=lambda rc: (-rc[0], rc[1]))


def semistandard_violation(entries: Mapping[Cell, Letter]) -> str | None:
    """Describe the first broken rule, or ``None`` for a semistandard filling."""
    for (r, c), x in entries.items():
        if x.value < 1:
            return f"non-positive letter {x} at {(r, c)}"
        right = entries.get((r, c + 1))
        if right is not None:
            if right < x:
                return f"row decreases at {(r, c)}-{(r, c + 1)}"
            if right == x and x.primed:
                return f"two {x} in row {r} at {(r, c)}-{(r, c + 1)}"
        below = entries.get((r + 1, c))
        if below is not None:
            if below < x:
                return f"column decreases at {(r, c)}-{(r + 1, c)}"
            if below == x and not x.primed:
                return f"two {x} in column {c} at {(r, c)}-{(r + 1, c)}"
    return None


def canonical_entries(entries: Mapping[Cell, Letter]) -> dict[Cell, Letter]:
    """Unprime the first occurrence of every value in reading order."""
    out = dict(entries)
    seen: set[int] = set()
    for cell in reading_cells(entries):
        x = out[cell]
        if x.value not in seen:
            seen.add(x.value)
            if x.primed:
                out[cell] = Letter(x.value, False)
    return out


def _render(shape: SkewShape, entries: Mapping[Cell, object]) -> str:
    lines = []
    for r in range(1, len(shape.outer) + 1):
        toks = ["."] * (r - 1) + ["#"] * shape.inner.part(r)
        toks += [str(entries[(r, c)]) for c in shape.row_range(r)]
        lines.append(" ".join(toks))
    return "\n".join(lines)


def _parse_rows(text: str) -> tuple[SkewShape, dict[Cell, Letter]]:
    outer, inner, entries = [], [], {}
    lines = [ln for ln in text.strip("\n").splitlines() if ln.strip()]
    for r, line in enumerate(lines, 1):
        toks = line.split()
        dots = 0
        while dots < len(toks) and toks[dots] == ".":
            dots += 1
        if dots not in (0, r - 1):
            raise ShapeError(f"row {r} has {dots} shift markers, expected {r - 1}")
        toks = toks[dots:]
        holes = 0
        while holes < len(toks) and toks[holes] == "#":
            holes += 1
        letters = [Letter.parse(t) for t in toks[holes:]]
        if any(t in (".", "#") for t in toks[holes:]):
            raise ShapeError(f"inner cells must precede entries in row {r}")
        inner.append(holes)
        outer.append(holes + len(letters))
        for k, x in enumerate(letters):
            entries[(r, r + holes + k)] = x
    return SkewShape(StrictPartition(outer), StrictPartition(inner)), entries


class _Filling:
    __slots__ = ("shape", "_entries", "_key")

    def __getitem__(self, cell: Cell) -> Letter:
        return self._entries[cell]

    def get(self, cell: Cell, default=None):
        return self._entries.get(cell, default)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> dict[Cell, Letter]:
        return dict(self._entries)

    def cells(self) -> list[Cell]:
        return sorted(self._entries)

    def items(self) -> list[tuple[Cell, Letter]]:
        return sorted(self._entries.items())

    def rows(self) -> list[list[Letter]]:
        return [[self._entries[(r, c)] for c in self.shape.row_range(r)]
                for r in range(1, len(self.shape.outer) + 1)]

    def reading_word(self) -> Word:
        return Word(self._entries[c] for c in reading_cells(self._entries))

    def raw_reading_word(self) -> list[Letter]:
        return [self._entries[c] for c in reading_cells(self._entries)]

    def weight(self, n: int | None = None) -> tuple[int, ...]:
        return weight_of(self._entries.values(), n)

    def strip(self, value: int) -> set[Cell]:
        return {c for c, x in self._entries.items() if x.value == value}

    def to_text(self) -> str:
        return _render(self.shape, self._entries)

    def __str__(self) -> str:
        return self.to_text()

    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.shape.outer, self.shape.inner, tuple(sorted(self._entries.items())))
        return self._key

    def __hash__(self) -> int:
        return hash(self.key())

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.key() == other.key()

    def __lt__(self, other: "_Filling") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        """Shape, then the letters in row-major order."""
        return (self.shape.outer, self.shape.inner,
                tuple(x.rank for _, x in sorted(self._entries.items())))


class ShiftedTableau(_Filling):
    """A semistandard shifted tableau, stored in canonical form.

    ``n`` is the alphabet bound; it does not take part in equality.
    """

    __slots__ = ("n",)

    def __init__(self, shape: SkewShape, entries: Mapping[Cell, Letter], n: int | None = None,
                 *, check: bool = True):
        entries = {cell: Letter(*x) for cell, x in entries.items()}
        top = max((x.value for x in entries.values()), default=0)
        if check:
            if set(entries) != set(shape.cells()):
                raise TableauError(f"entries do not fill the shape {shape}")
            bad = semistandard_violation(entries)
            if bad:
                raise TableauError(f"not semistandard: {bad}")
            if n is not None and top > n:
                raise TableauError(f"letter {top} exceeds alphabet bound {n}")
        self.shape = shape
        self._entries = canonical_entries(entries)
        self.n = top if n is None else n
        self._key = None

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "ShiftedTableau":
        shape, entries = _parse_rows(text)
        return cls(shape, entries, n)

    @classmethod
    def from_json(cls, data: str | Mapping) -> "ShiftedTableau":
        if isinstance(data, str):
            data = json.loads(data)
        shape = SkewShape(StrictPartition(data["outer"]), StrictPartition(data.get("inner", ())))
        entries = {}
        for r, row in enumerate(data["rows"], 1):
            cols = list(shape.row_range(r))
            if len(row) != len(cols):
                raise ShapeError(f"row {r} has {len(row)} entries, shape needs {len(cols)}")
            for c, tok in zip(cols, row):
                entries[(r, c)] = Letter.parse(str(tok))
        return cls(shape, entries, data.get("n"))

    def to_json(self) -> dict:
        return {
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "n": self.n,
            "rows": [[str(x) for x in row] for row in self.rows()],
        }

    def __repr__(self) -> str:
        return f"ShiftedTableau.from_text({self.to_text()!r})"

    @property
    def is_straight(self) -> bool:
        return self.shape.is_straight

    @property
    def size(self) -> int:
        return len(self._entries)

    def is_standard(self) -> bool:
        return sorted(x.value for x in self._entries.values()) == list(
            range(1, len(self._entries) + 1))

    def with_n(self, n: int) -> "ShiftedTableau":
        return ShiftedTableau(self.shape, self._entries, n, check=False)

    def restrict(self, i: int, j: int) -> "ShiftedTableau":
        """The skew subtableau of letters ``i..j``."""
        inner, outer = _strip_bounds(self.shape, self._entries, i, j)
        entries = {c: x for c, x in self._entries.items() if i <= x.value <= j}
        return ShiftedTableau(SkewShape(outer, inner), entries, self.n, check=False)

    def relabel(self, fn: Callable[[Letter], Letter], n: int | None = None) -> "ShiftedTableau":
        return ShiftedTableau(self.shape, {c: fn(x) for c, x in self._entries.items()},
                              self.n if n is None else n)


def _strip_bounds(shape: SkewShape, entries: Mapping[Cell, Letter], i: int, j: int):
    below: dict[int, int] = {}
    upto: dict[int, int] = {}
    for (r, _), x in entries.items():
        if x.value < i:
            below[r] = below.get(r, 0) + 1
        if x.value <= j:
            upto[r] = upto.get(r, 0) + 1
    rows = len(shape.outer)
    inner = StrictPartition(shape.inner.part(r) + below.get(r, 0) for r in range(1, rows + 1))
    outer = StrictPartition(shape.inner.part(r) + upto.get(r, 0) for r in range(1, rows + 1))
    return inner, outer


class RawFilling(_Filling):
    """A filling of a skew shape that need not be semistandard (nor canonical)."""

    def __init__(self, shape: SkewShape, entries: Mapping[Cell, Letter]):
        entries = {cell: Letter(*x) for cell, x in entries.items()}
        if set(entries) != set(shape.cells()):
            raise TableauError(f"entries do not fill the shape {shape}")
        self.shape = shape
        self._entries = entries
        self._key = None

    @classmethod
    def from_text(cls, text: str) -> "RawFilling":
        return cls(*_parse_rows(text))

    def __repr__(self) -> str:
        return f"RawFilling.from_text({self.to_text()!r})"

    def is_semistandard(self) -> bool:
        return semistandard_violation(self._entries) is None

    def to_tableau(self, n: int | None = None) -> ShiftedTableau:
        return ShiftedTableau(self.shape, self._entries, n)


def std(tab: ShiftedTableau) -> ShiftedTableau:
    """Standardization: relabel by reading-word position, least letters first."""
    cells = reading_cells(tab.cells())
    labels = standardization_labels([tab[c] for c in cells])
    return ShiftedTableau(tab.shape, {c: Letter(k) for c, k in zip(cells, labels)},
                          len(cells), check=False)


def sstd(tab: ShiftedTableau, nu: Sequence[int]) -> ShiftedTableau | None:
    """Semistandardization of a standard tableau to weight ``nu``.

    Returns ``None`` when the resulting filling is not semistandard.
    """
    if not tab.is_standard():
        raise TableauError("semistandardization needs a standard tableau")
    if sum(nu) != tab.size or any(k < 0 for k in nu):
        raise TableauError(f"weight {tuple(nu)} does not sum to {tab.size}")
    block = []
    for k, count in enumerate(nu, 1):
        block += [k] * count
    where = {x.value: cell for cell, x in tab.items()}
    entries = {}
    for label, (r, c) in where.items():
        k = block[label - 1]
        primed = any(block[m - 1] == k and where[m][0] > r and where[m][1] <= c
                     for m in range(label + 1, len(block) + 1))
        entries[(r, c)] = Letter(k, primed)
    if semistandard_violation(entries):
        return None
    return ShiftedTableau(tab.shape, entries, len(nu), check=False)


def yamanouchi(nu: Sequence[int], n: int | None = None) -> ShiftedTableau:
    """Row ``i`` filled with unprimed ``i``."""
    shape = SkewShape(StrictPartition(nu))
    entries = {(r, c): Letter(r) for r, c in shape.cells()}
    return ShiftedTableau(shape, entries, len(shape.outer) if n is None else n)


def _fillings(shape: SkewShape, n: int, nu: Sequence[int] | None) -> list[ShiftedTableau]:
    order = reading_cells(shape.cells())
    letters = [Letter(v, p) for v in range(1, n + 1) for p in (True, False)]
    counts = [0] * (n + 1)
    cur: dict[Cell, Letter] = {}
    out: list[ShiftedTableau] = []

    def rec(k: int) -> None:
        if k == len(order):
            if nu is None or all(counts[v] == nu[v - 1] for v in range(1, n + 1)):
                out.append(ShiftedTableau(shape, cur, n, check=False))
            return
        r, c = order[k]
        left = cur.get((r, c - 1))
        below = cur.get((r + 1, c))
        for x in letters:
            if left is not None and (x < left or (x == left and x.primed)):
                continue
            if below is not None and (x > below or (x == below and not x.primed)):
                continue
            if x.primed and counts[x.value] == 0:
                continue
            if nu is not None and counts[x.value] >= nu[x.value - 1]:
                continue
            cur[(r, c)] = x
            counts[x.value] += 1
            rec(k + 1)
            counts[x.value] -= 1
        cur.pop((r, c), None)

    rec(0)
    out.sort(key=ShiftedTableau.sort_key)
    return out


def enumerate_tableaux(shape: SkewShape, n: int) -> Iterator[ShiftedTableau]:
    """All canonical semistandard tableaux of ``shape`` with letters at most ``n``.

    Ordered lexicographically by the letters read row by row from the top.
    """
    yield from _fillings(shape, n, None)


def count_tableaux(shape: SkewShape, n: int) -> int:
    return len(_fillings(shape, n, None))


def enumerate_by_weight(shape: SkewShape, nu: Sequence[int]) -> Iterator[ShiftedTableau]:
    if sum(nu) != shape.size:
        return
    yield from _fillings(shape, len(nu), tuple(nu))


def standard_tableaux(shape: SkewShape) -> list[ShiftedTableau]:
    """Standard fillings, built by adding boxes one at a time."""
    out: list[ShiftedTableau] = []

    def rec(current: StrictPartition, chain: list[StrictPartition]) -> None:
        if current == shape.outer:
            out.append(chain_to_tableau(chain))
            return
        for row in current.addable_rows():
            if current.part(row) + 1 <= shape.outer.part(row):
                nxt = current.add_box(row)
                rec(nxt, chain + [nxt])

    rec(shape.inner, [shape.inner])
    out.sort(key=ShiftedTableau.sort_key)
    return out


def tableau_to_chain(tab: ShiftedTableau) -> list[StrictPartition]:
    """The shapes occupied by letters ``<= k`` for ``k = 0..n`` (over the inner shape)."""
    chain = [tab.shape.inner]
    for k in range(1, tab.n + 1):
        _, outer = _strip_bounds(tab.shape, tab._entries, 1, k)
        chain.append(outer)
    return chain


def chain_to_tableau(chain: Sequence[Sequence[int]], n: int | None = None) -> ShiftedTableau:
    """Label the cells of ``chain[k] / chain[k-1]`` with ``k`` (a standard tableau when steps are single boxes)."""
    chain = [StrictPartition(p) for p in chain]
    entries = {}
    for k in range(1, len(chain)):
        prev, cur = chain[k - 1], chain[k]
        if not cur.contains(prev):
            raise ShapeError(f"{prev} is not contained in {cur}")
        for r in range(1, len(cur) + 1):
            for c in range(r + prev.part(r), r + cur.part(r)):
                entries[(r, c)] = Letter(k)
    shape = SkewShape(chain[-1], chain[0])
    return ShiftedTableau(shape, entries, len(chain) - 1 if n is None else n)


def is_ballot(word: Sequence[Letter]) -> bool:
    """The rectification of the word is the Yamanouchi tableau of its weight."""
    from .jdt import rectify_word

    wt = weight_of(word)
    try:
        target = yamanouchi(wt)
    except ShapeError:
        return False
    return rectify_word(word) == target


def is_lrs(tab: ShiftedTableau) -> bool:
    """The rectification is the Yamanouchi tableau of the same weight."""
    from .jdt import rectify

    try:
        target = yamanouchi(tab.weight())
    except ShapeError:
        return False
    return rectify(tab)[0] == target


def lrs_tableaux(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> list[ShiftedTableau]:
    if not StrictPartition(lam).contains(mu):
        return []
    shape = SkewShape(StrictPartition(lam), StrictPartition(mu))
    return [t for t in enumerate_by_weight(shape, nu) if is_lrs(t)]


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Number of LRS tableaux of shape ``lam/mu`` and weight ``nu``."""
    lam, mu, nu = StrictPartition(lam), StrictPartition(mu), StrictPartition(nu)
    if lam.size != mu.size + nu.size:
        warnings.warn(f"sizes do not match for ({lam}; {mu}, {nu}); coefficient is 0",
                      stacklevel=2)
        return 0
    if not (lam.contains(mu) and lam.contains(nu)):
        return 0
    return len(lrs_tableaux(lam, mu, nu))
