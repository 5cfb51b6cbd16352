"""Growth diagrams for standard shifted tableaux.

A standard tableau is a chain of strict partitions growing one box at a time.
Every square of a growth diagram is completed by :func:`local_rule`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .jdt import row_reading_filler
from .shapes import Permutation, StrictPartition
from .tableau import ShiftedTableau, TableauError, chain_to_tableau, sstd, std, tableau_to_chain


def intermediates(nu: StrictPartition, lam: StrictPartition) -> list[StrictPartition]:
    """Strict partitions one box above ``nu`` and one box below ``lam``."""
    out = []
    for row in nu.addable_rows():
        kappa = nu.add_box(row)
        if lam.contains(kappa):
            out.append(kappa)
    return out


def local_rule(nu: Sequence[int], mu: Sequence[int], lam: Sequence[int]) -> StrictPartition:
    """Given ``nu < mu < lam`` (single boxes), the other intermediate shape, or ``mu`` if none."""
    nu, mu, lam = StrictPartition(nu), StrictPartition(mu), StrictPartition(lam)
    if not (lam.contains(mu) and mu.contains(nu) and mu.size == nu.size + 1 == lam.size - 1):
        raise TableauError(f"{nu} < {mu} < {lam} is not a chain of single boxes")
    others = [k for k in intermediates(nu, lam) if k != mu]
    return others[0] if others else mu


Position = tuple[int, int]


@dataclass
class GrowthGrid:
    """A rectangular (or triangular, with ``None`` holes) array of strict partitions.

    ``segments`` names chains inside the array as lists of positions.
    """

    rows: list[list[StrictPartition | None]]
    segments: dict[str, list[Position]] = field(default_factory=dict)

    def chain(self, name: str) -> list[StrictPartition]:
        """A named segment, optionally sliced: ``"bottom"`` or ``"bottom[0:3]"``."""
        base, _, rest = name.partition("[")
        out = [self.rows[r][c] for r, c in self.segments[base]]
        if rest:
            start, stop = rest.rstrip("]").split(":")
            out = out[int(start or 0): int(stop) if stop else None]
        return out

    def tableau(self, name: str) -> ShiftedTableau:
        return chain_to_tableau(self.chain(name))

    def to_json(self) -> dict:
        return {
            "rows": [[None if p is None else list(p) for p in row] for row in self.rows],
            "segments": {k: [x for p in v for x in p] for k, v in self.segments.items()},
        }

    def _tokens(self) -> tuple[list[list[str]], int]:
        cells = [["" if p is None else (".".join(map(str, p)) or "0") for p in row] for row in self.rows]
        return cells, max((len(x) for row in cells for x in row), default=1)

    def to_text(self) -> str:
        """Table layout: one line per grid row."""
        cells, width = self._tokens()
        return "\n".join(" ".join(x.rjust(width) for x in row).rstrip() for row in cells)

    def to_diamond(self) -> str:
        """Rotated layout: cell ``(r, c)`` sits on line ``r + c``, column ``c - r``."""
        cells, width = self._tokens()
        height = len(cells)
        lines: dict[int, dict[int, str]] = {}
        for r, row in enumerate(cells):
            for c, tok in enumerate(row):
                if tok:
                    lines.setdefault(r + c, {})[c - r + height - 1] = tok
        out = []
        for k in sorted(lines):
            slots = lines[k]
            line = [" " * width] * (max(slots) + 1)
            for pos, tok in slots.items():
                line[pos] = tok.center(width)
            out.append("".join(line).rstrip())
        return "\n".join(out)


@dataclass
class CompositeGrowth:
    """Several growth grids whose named segments are glued together."""

    parts: dict[str, GrowthGrid]
    links: list[tuple[str, str, str, str]]
    result: ShiftedTableau

    def __post_init__(self) -> None:
        if not self.check_links():
            raise TableauError("glued growth diagrams disagree on a shared chain")

    def check_links(self) -> bool:
        return all(self.parts[a].chain(sa) == self.parts[b].chain(sb) for a, sa, b, sb in self.links)

    def to_json(self) -> dict:
        return {
            "parts": {k: g.to_json() for k, g in self.parts.items()},
            "links": [list(x) for x in self.links],
            "result": self.result.to_json(),
        }


def rectification_grid(order_chain: Sequence[Sequence[int]], chain: Sequence[Sequence[int]]) -> GrowthGrid:
    """Top row: ``chain``; left column read upwards: ``order_chain`` (ending where ``chain`` starts)."""
    order_chain = [StrictPartition(p) for p in order_chain]
    chain = [StrictPartition(p) for p in chain]
    if order_chain[-1] != chain[0]:
        raise TableauError("the order chain must end at the inner shape")
    m, k = len(order_chain) - 1, len(chain) - 1
    rows: list[list] = [list(chain)] + [[order_chain[m - r]] + [None] * k for r in range(1, m + 1)]
    for r in range(m):
        for c in range(k):
            rows[r + 1][c + 1] = local_rule(rows[r + 1][c], rows[r][c], rows[r][c + 1])
    return GrowthGrid(rows, {
        "top": [(0, c) for c in range(k + 1)],
        "left": [(r, 0) for r in range(m, -1, -1)],
        "bottom": [(m, c) for c in range(k + 1)],
        "right": [(r, k) for r in range(m, -1, -1)],
    })


def infusion_growth(s: ShiftedTableau, t: ShiftedTableau) -> tuple[ShiftedTableau, ShiftedTableau, GrowthGrid]:
    """Infusion of standard tableaux via a rectangular growth diagram."""
    if t.shape.inner != s.shape.outer:
        raise TableauError(f"{t.shape} does not extend {s.shape}")
    grid = rectification_grid(tableau_to_chain(std(s)), tableau_to_chain(std(t)))
    return grid.tableau("bottom"), grid.tableau("right"), grid


def rectify_growth(t: ShiftedTableau, order: ShiftedTableau | None = None) -> ShiftedTableau:
    if order is None:
        order = row_reading_filler(t.shape.inner)
    return infusion_growth(order, t)[0]


def evac_grid(chain: Sequence[Sequence[int]]) -> GrowthGrid:
    """Triangular diagram: row ``i`` is the chain after removing the ``i`` smallest entries."""
    chain = [StrictPartition(p) for p in chain]
    if chain[0]:
        raise TableauError("evacuation diagrams start from the empty shape")
    n = len(chain) - 1
    empty = StrictPartition()
    rows: list[list] = [list(chain)] + [[None] * (n + 1) for _ in range(n)]
    for i in range(1, n + 1):
        rows[i][i] = empty
    for i in range(n):
        for j in range(i + 1, n):
            rows[i + 1][j + 1] = local_rule(rows[i + 1][j], rows[i][j], rows[i][j + 1])
    return GrowthGrid(rows, {
        "top": [(0, j) for j in range(n + 1)],
        "diagonal": [(i, i) for i in range(n + 1)],
        "result": [(i, n) for i in range(n, -1, -1)],
    })


def _standard_straight(t: ShiftedTableau) -> None:
    if not (t.is_straight and t.is_standard()):
        raise TableauError("growth evacuation takes a standard tableau of straight shape")


def evac_growth(t: ShiftedTableau) -> ShiftedTableau:
    _standard_straight(t)
    return evac_grid(tableau_to_chain(t)).tableau("result")


def _glue(lower: ShiftedTableau, upper_chain: Sequence[StrictPartition], n: int) -> ShiftedTableau:
    """Standard tableau from ``lower`` followed by the steps of ``upper_chain``."""
    chain = tableau_to_chain(lower) + list(upper_chain[1:])
    return chain_to_tableau(chain, n)


def evac_k_growth(t: ShiftedTableau, k: int) -> ShiftedTableau:
    """Evacuate the entries ``1..k`` using the truncated triangle."""
    _standard_straight(t)
    chain = tableau_to_chain(t)
    part = evac_grid(chain[: k + 1]).tableau("result")
    return _glue(part, chain[k:], t.n)


def reversal_growth(t: ShiftedTableau, filler: ShiftedTableau | None = None) -> tuple[ShiftedTableau, CompositeGrowth]:
    """Reversal of a standard skew tableau: infuse, evacuate, infuse back."""
    if filler is None:
        filler = row_reading_filler(t.shape.inner)
    first = rectification_grid(tableau_to_chain(filler), tableau_to_chain(t))
    triangle = evac_grid(first.chain("bottom"))
    second = rectification_grid(triangle.chain("result"), first.chain("right"))
    result = second.tableau("right").with_n(t.n)
    comp = CompositeGrowth(
        {"infuse": first, "evacuate": triangle, "return": second},
        [("infuse", "bottom", "evacuate", "top"), ("evacuate", "result", "return", "left"),
         ("infuse", "right", "return", "top"), ("infuse", "left", "return", "bottom")],
        result,
    )
    return result, comp


def _eta_straight_growth(chain: list[StrictPartition], i: int, j: int) -> tuple[list[StrictPartition], dict]:
    """Chain of eta_{i,j} applied to the straight standard tableau ``chain[0..j]``."""
    parts: dict[str, GrowthGrid] = {}
    head = chain[: i]
    first_tri = evac_grid(head)
    parts["evacuate-head"] = first_tri
    infuse = rectification_grid(first_tri.chain("result"), chain[i - 1: j + 1])
    parts["infuse"] = infuse
    mid = evac_grid(infuse.chain("bottom"))
    parts["evacuate-block"] = mid
    back = rectification_grid(mid.chain("result"), infuse.chain("right"))
    parts["return"] = back
    last_tri = evac_grid(back.chain("bottom"))
    parts["restore-head"] = last_tri
    new_chain = last_tri.chain("result") + back.chain("right")[1:]
    return new_chain, parts


_STRAIGHT_ETA_LINKS = [
    ("evacuate-head", "result", "infuse", "left"),
    ("infuse", "bottom", "evacuate-block", "top"),
    ("evacuate-block", "result", "return", "left"),
    ("infuse", "right", "return", "top"),
    ("return", "bottom", "restore-head", "top"),
]


def eta_growth(t: ShiftedTableau, i: int, j: int,
               filler: ShiftedTableau | None = None) -> tuple[ShiftedTableau, CompositeGrowth]:
    """``eta_{i,j}`` on a standard tableau through growth diagrams."""
    if not t.is_standard():
        raise TableauError("growth route takes a standard tableau")
    if not 1 <= i < j <= t.n:
        raise ValueError(f"need 1 <= i < j <= {t.n}")
    chain = tableau_to_chain(t)
    if t.is_straight:
        new_chain, parts = _eta_straight_growth(chain, i, j)
        links = list(_STRAIGHT_ETA_LINKS)
    else:
        if filler is None:
            filler = row_reading_filler(t.shape.inner)
        outer = rectification_grid(tableau_to_chain(filler), chain[: j + 1])
        inner_chain, parts = _eta_straight_growth(outer.chain("bottom"), i, j)
        back = rectification_grid(inner_chain, outer.chain("right"))
        parts = {"infuse-outer": outer, **parts, "return-outer": back}
        new_chain = back.chain("right")
        links = [("infuse-outer", f"bottom[0:{i}]", "evacuate-head", "top"),
                 ("infuse-outer", f"bottom[{i - 1}:{j + 1}]", "infuse", "top"),
                 ("infuse-outer", "right", "return-outer", "top"),
                 ("infuse-outer", "left", "return-outer", "bottom"),
                 ("return-outer", f"left[0:{i}]", "restore-head", "result"),
                 ("return-outer", f"left[{i - 1}:{j + 1}]", "return", "right")]
        links += _STRAIGHT_ETA_LINKS
    new_chain = new_chain + chain[j + 1:]
    result = chain_to_tableau(new_chain, t.n)
    return result, CompositeGrowth(parts, links, result)


def eta_semistandard_growth(t: ShiftedTableau, i: int, j: int) -> ShiftedTableau | None:
    """``eta_{i,j}`` on a semistandard tableau: standardize, act on the matching block, re-weight."""
    nu = t.weight(t.n)
    k = sum(nu[: i - 1]) + 1
    l = sum(nu[:j])
    s = std(t)
    if l > k:
        s = eta_growth(s, k, l)[0]
    new_nu = Permutation.reverse_range(i, j, len(nu)).act_vector(nu)
    out = sstd(s, new_nu)
    return None if out is None else out.with_n(t.n)


def evac_semistandard_growth(t: ShiftedTableau) -> ShiftedTableau | None:
    if not t.is_straight:
        raise TableauError("evacuation needs a straight shape")
    return eta_semistandard_growth(t, 1, t.n) if t.n > 1 else t
