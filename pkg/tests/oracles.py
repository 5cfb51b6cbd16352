"""Brute-force reference implementations, written without the package's algorithms."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial


def strict_partitions(size: int) -> list[tuple[int, ...]]:
    out = [] if size else [()]
    for k in range(1, size + 1):
        for parts in itertools.combinations(range(size, 0, -1), k):
            if sum(parts) == size:
                out.append(parts)
    return sorted(out, reverse=True)


def shifted_cells(outer, inner=()) -> list[tuple[int, int]]:
    inner = list(inner) + [0] * (len(outer) - len(inner))
    return [(r + 1, r + 1 + c) for r, p in enumerate(outer) for c in range(inner[r], p)]


def _rank(letter) -> int:
    value, primed = letter
    return 2 * value - primed


def is_semistandard(filling: dict) -> bool:
    """Rows and columns weakly increase; primes never repeat in a row, unprimed never in a column."""
    for (r, c), x in filling.items():
        right, below = filling.get((r, c + 1)), filling.get((r + 1, c))
        if right is not None and (_rank(right) < _rank(x) or (right == x and x[1])):
            return False
        if below is not None and (_rank(below) < _rank(x) or (below == x and not x[1])):
            return False
    # non-adjacent cells in a row/column are covered by transitivity except for equal letters
    for (r, c), x in filling.items():
        for (r2, c2), y in filling.items():
            if x == y and (r, c) < (r2, c2):
                if r == r2 and x[1]:
                    return False
                if c == c2 and not x[1]:
                    return False
    return True


def reading_word(filling: dict) -> list:
    return [filling[c] for c in sorted(filling, key=lambda rc: (-rc[0], rc[1]))]


def is_canonical(filling: dict) -> bool:
    seen = set()
    for value, primed in reading_word(filling):
        if value not in seen and primed:
            return False
        seen.add(value)
    return True


def brute_tableaux(outer, inner, n: int) -> list[dict]:
    """Every canonical semistandard filling, by trying all letters in all cells."""
    cells = shifted_cells(outer, inner)
    letters = [(v, p) for v in range(1, n + 1) for p in (1, 0)]
    out = []
    for choice in itertools.product(letters, repeat=len(cells)):
        filling = dict(zip(cells, choice))
        if is_semistandard(filling) and is_canonical(filling):
            out.append(filling)
    return out


def shifted_standard_count(lam) -> int:
    """Closed product formula for standard fillings of a shifted straight shape."""
    n = sum(lam)
    value = Fraction(factorial(n))
    for p in lam:
        value /= factorial(p)
    for a, b in itertools.combinations(lam, 2):
        value *= Fraction(a - b, a + b)
    assert value.denominator == 1
    return int(value)


def linear_extensions(outer, inner=()) -> int:
    """Standard fillings of a skew shifted shape counted as linear extensions of its cell poset."""
    cells = frozenset(shifted_cells(outer, inner))

    @lru_cache(maxsize=None)
    def count(remaining: frozenset) -> int:
        if not remaining:
            return 1
        total = 0
        for r, c in remaining:
            if (r - 1, c) not in remaining and (r, c - 1) not in remaining:
                total += count(remaining - {(r, c)})
        return total

    return count(cells)


def one_box_intermediates(nu, lam) -> list[tuple[int, ...]]:
    """Strict partitions kappa with nu < kappa < lam, each step one box, by direct search."""
    out = []
    for r in range(len(lam)):
        kappa = list(nu) + [0] * (len(lam) - len(nu))
        kappa[r] += 1
        strict = all(kappa[k] > kappa[k + 1] for k in range(len(kappa) - 1) if kappa[k + 1])
        fits = all(a <= b for a, b in zip(kappa, lam))
        if strict and fits and all(kappa[k] for k in range(r)):
            out.append(tuple(p for p in kappa if p))
    return out
