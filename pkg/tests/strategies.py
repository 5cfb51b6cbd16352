"""Hypothesis strategies drawing from small finite families of tableaux."""

from functools import lru_cache

from hypothesis import strategies as st

from shtab.universe import skew_universe, standard_universe, straight_universe


@lru_cache(maxsize=None)
def straight(max_cells: int = 7, n: int = 4):
    return tuple(straight_universe(max_cells, n))


@lru_cache(maxsize=None)
def skew(max_cells: int = 7, n: int = 4, width: int = 5):
    return tuple(skew_universe(max_cells, n, width))


@lru_cache(maxsize=None)
def standard(max_cells: int = 7, width: int = 5):
    return tuple(standard_universe(max_cells, width))


def straight_tableaux(max_cells=7, n=4):
    return st.sampled_from(straight(max_cells, n))


def skew_tableaux(max_cells=7, n=4, width=5):
    return st.sampled_from(skew(max_cells, n, width))


def any_tableaux(max_cells=7, n=4, width=5):
    return st.one_of(straight_tableaux(max_cells, n), skew_tableaux(max_cells, n, width))


def standard_tableaux(max_cells=7, width=5):
    return st.sampled_from(standard(max_cells, width))


@lru_cache(maxsize=None)
def pairs(max_total: int = 6, n: int = 3, straight_inner: bool = True):
    """All (S, T) with T extending S, at most ``max_total`` cells in all, letters at most ``n``."""
    from shtab.shapes import SkewShape
    from shtab.tableau import enumerate_tableaux
    from shtab.universe import skew_shapes

    out = []
    for shape in skew_shapes(max_total, max_total):
        if shape.outer.size > max_total:
            continue
        inner_shapes = [SkewShape(shape.inner)]
        if not straight_inner:
            inner_shapes = [s for s in skew_shapes(max_total, max_total)
                            if s.outer == shape.inner and s.inner] + inner_shapes
        ts = list(enumerate_tableaux(shape, n))
        for inner in inner_shapes:
            for s in enumerate_tableaux(inner, n):
                out.extend((s, t) for t in ts)
    return tuple(out)


def tableau_pairs(max_total=6, n=3, straight_inner=True):
    return st.sampled_from(pairs(max_total, n, straight_inner))


def representatives(tab):
    """Every semistandard filling with the same canonical form, by toggling first-occurrence primes."""
    import itertools as it

    from shtab.tableau import RawFilling

    firsts = {}
    for cell in sorted(tab.cells(), key=lambda rc: (-rc[0], rc[1])):
        firsts.setdefault(tab[cell].value, cell)
    cells = sorted(firsts.values())
    out = []
    for flips in it.product((False, True), repeat=len(cells)):
        entries = tab.entries
        for cell, flip in zip(cells, flips):
            if flip:
                entries[cell] = entries[cell].toggled()
        raw = RawFilling(tab.shape, entries)
        if raw.is_semistandard():
            out.append(raw)
    return out
