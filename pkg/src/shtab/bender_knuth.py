"""Shifted Bender-Knuth involutions, promotion, generator words and relation checks."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .evacuation import eta_ij, sigma, tilde_evac_ij
from .shapes import Letter
from .switching import sp_ij, sw_given
from .tableau import ShiftedTableau


def _check_index(tab: ShiftedTableau, i: int, top: int) -> None:
    if not 1 <= i or top > tab.n:
        raise ValueError(f"index {i} out of range for alphabet [{tab.n}]")


def t(tab: ShiftedTableau, i: int) -> ShiftedTableau:
    """Switch the i- and (i+1)-letters, then swap their labels."""
    _check_index(tab, i, i + 1)
    swap = {i: i + 1, i + 1: i}
    ent = {c: Letter(swap.get(x.value, x.value), x.primed) for c, x in sp_ij(tab, i, i + 1).items()}
    return ShiftedTableau(tab.shape, ent, tab.n)


def promotion(tab: ShiftedTableau, i: int) -> ShiftedTableau:
    """``t_i ... t_2 t_1`` (``t_1`` applied first)."""
    _check_index(tab, i, i + 1)
    for k in range(1, i + 1):
        tab = t(tab, k)
    return tab


def promotion_inverse(tab: ShiftedTableau, i: int) -> ShiftedTableau:
    _check_index(tab, i, i + 1)
    for k in range(i, 0, -1):
        tab = t(tab, k)
    return tab


def promotion_switching(tab: ShiftedTableau, i: int) -> ShiftedTableau:
    """Switch the 1-letters past ``2..i+1``, then relabel ``1 -> i+1`` and ``k -> k-1``."""
    _check_index(tab, i, i + 1)
    raw = sw_given(tab, 1, range(2, i + 2))

    def cycle(v: int) -> int:
        if v == 1:
            return i + 1
        return v - 1 if v <= i + 1 else v

    return ShiftedTableau(tab.shape, {c: Letter(cycle(x.value), x.primed) for c, x in raw.items()}, tab.n)


def q(tab: ShiftedTableau, i: int) -> ShiftedTableau:
    """``t_1 (t_2 t_1) ... (t_i ... t_1)``, i.e. promotions ``p_i`` first down to ``p_1``."""
    _check_index(tab, i, i + 1)
    for k in range(i, 0, -1):
        tab = promotion(tab, k)
    return tab


def q_ij(tab: ShiftedTableau, i: int, j: int) -> ShiftedTableau:
    """``q_{j-1} q_{j-i} q_{j-1}``."""
    if not 1 <= i < j:
        raise ValueError(f"need 1 <= i < j, got {i}, {j}")
    return q(q(q(tab, j - 1), j - i), j - 1)


_TOKEN = re.compile(r"^(te|t|p|q|s)(\d+)(?:,(\d+))?(\^-1)?$")


@dataclass(frozen=True)
class Generator:
    name: str
    i: int
    j: int | None = None
    inverse: bool = False

    def __str__(self) -> str:
        body = f"{self.name}{self.i}" + (f",{self.j}" if self.j is not None else "")
        return body + ("^-1" if self.inverse else "")

    def __call__(self, tab: ShiftedTableau) -> ShiftedTableau:
        i, j = self.i, self.j
        if self.name == "t":
            return t(tab, i)
        if self.name == "p":
            return promotion_inverse(tab, i) if self.inverse else promotion(tab, i)
        if self.name == "q":
            return q(tab, i) if j is None else q_ij(tab, i, j)
        if self.name == "s":
            return sigma(tab, i) if j is None else eta_ij(tab, i, j)
        if self.name == "te":
            return tilde_evac_ij(tab, 1, i) if j is None else tilde_evac_ij(tab, i, j)
        raise ValueError(f"unknown generator {self.name}")


def parse_generator(token: str) -> Generator:
    """``t2``, ``p3``, ``p3^-1``, ``q2``, ``q2,4``, ``s1`` (=s1,2), ``s1,3``, ``te3``, ``te2,3``."""
    m = _TOKEN.match(token.strip())
    if not m:
        raise ValueError(f"bad generator {token!r}")
    name, i, j, inv = m.groups()
    if inv and name != "p":
        raise ValueError(f"only promotion has an inverse token: {token!r}")
    if j is not None and name in ("t", "p"):
        raise ValueError(f"{name} takes a single index: {token!r}")
    return Generator(name, int(i), int(j) if j else None, bool(inv))


@dataclass(frozen=True)
class GeneratorWord:
    """A product of generators, applied right to left."""

    generators: tuple[Generator, ...]

    @classmethod
    def parse(cls, text: str) -> "GeneratorWord":
        return cls(tuple(parse_generator(tok) for tok in text.split()))

    def __str__(self) -> str:
        return " ".join(map(str, self.generators))

    def __call__(self, tab: ShiftedTableau) -> ShiftedTableau:
        for g in reversed(self.generators):
            tab = g(tab)
        return tab

    def power(self, k: int) -> "GeneratorWord":
        return GeneratorWord(self.generators * k)


def evaluate(word: GeneratorWord | str, tab: ShiftedTableau) -> ShiftedTableau:
    if isinstance(word, str):
        word = GeneratorWord.parse(word)
    return word(tab)


class _Images:
    """Memoized generator images over a universe."""

    def __init__(self) -> None:
        self.cache: dict[tuple[str, ShiftedTableau], ShiftedTableau] = {}

    def apply(self, word: str, tab: ShiftedTableau) -> ShiftedTableau:
        for token in reversed(word.split()):
            key = (token, tab)
            hit = self.cache.get(key)
            if hit is None:
                hit = parse_generator(token)(tab)
                self.cache[key] = hit
            tab = hit
        return tab


def _relations(suite: str, n: int, straight: bool) -> list[tuple[str, str, str]]:
    """``(name, lhs, rhs)`` word pairs to compare on tableaux over ``[n]``."""
    rels = []
    if suite == "bk-basic":
        for i in range(1, n):
            rels.append((f"t{i}^2=1", f"t{i} t{i}", ""))
        for i in range(1, n):
            for j in range(i + 2, n):
                rels.append((f"t{i}t{j}=t{j}t{i}", f"t{i} t{j}", f"t{j} t{i}"))
    elif suite == "bk-qjk":
        if straight:
            for i in range(1, n):
                for j in range(i + 2, n + 1):
                    for k in range(j + 1, n + 1):
                        rels.append((f"(t{i}q{j},{k})^2=1", f"t{i} q{j},{k} t{i} q{j},{k}", ""))
    elif suite == "cactus-eta":
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        for i, j in pairs:
            rels.append((f"s{i},{j}^2=1", f"s{i},{j} s{i},{j}", ""))
            rels.append((f"s{i},{j}=s1,{j}s1,{j - i + 1}s1,{j}",
                         f"s{i},{j}", f"s1,{j} s1,{j - i + 1} s1,{j}"))
            for k, l in pairs:
                if j < k:
                    rels.append((f"s{i},{j}s{k},{l} commute", f"s{i},{j} s{k},{l}", f"s{k},{l} s{i},{j}"))
                if i <= k and l <= j and (k, l) != (i, j):
                    a, b = i + j - l, i + j - k
                    rels.append((f"s{i},{j}s{k},{l}=s{a},{b}s{i},{j}",
                                 f"s{i},{j} s{k},{l}", f"s{a},{b} s{i},{j}"))
    elif suite == "sigma":
        for i in range(1, n):
            rels.append((f"s{i}^2=1", f"s{i} s{i}", ""))
            for j in range(i + 2, n):
                rels.append((f"s{i}s{j}=s{j}s{i}", f"s{i} s{j}", f"s{j} s{i}"))
    elif suite == "q-involution":
        for i in range(1, n):
            rels.append((f"q{i}^2=1", f"q{i} q{i}", ""))
    else:
        raise ValueError(f"unknown relation suite {suite!r}")
    return rels


SUITES = ("bk-basic", "bk-qjk", "cactus-eta", "sbk-counterexamples", "braid-search")
EXTRA_SUITES = ("sigma", "q-involution")


def _word_image(images: _Images, word: str, tab: ShiftedTableau) -> ShiftedTableau:
    return images.apply(word, tab) if word else tab


MAX_LISTED = 100


def check_relations(suite: str, universe: Iterable[ShiftedTableau]) -> dict:
    """Evaluate an identity suite on every tableau and list the failures."""
    images = _Images()
    failures = []
    count = 0
    size = 0
    for tab in universe:
        size += 1
        for name, lhs, rhs in _relations(suite, tab.n, tab.is_straight):
            if _word_image(images, lhs, tab) != _word_image(images, rhs, tab):
                count += 1
                if len(failures) < MAX_LISTED:
                    failures.append({"word": name, "tableau": tab.to_text()})
    return {"suite": suite, "universe_size": size, "failure_count": count,
            "failures": failures, "witnesses": []}


def permutation_order(fn: Callable[[ShiftedTableau], ShiftedTableau],
                      universe: Sequence[ShiftedTableau]) -> int:
    """Order of a bijection of a finite set, from its cycle lengths."""
    index = {tab: k for k, tab in enumerate(universe)}
    seen = [False] * len(universe)
    order = 1
    for start in range(len(universe)):
        if seen[start]:
            continue
        length, k = 0, start
        while not seen[k]:
            seen[k] = True
            k = index[fn(universe[k])]
            length += 1
        order = math.lcm(order, length)
    return order


def braid_search(universe: Sequence[ShiftedTableau], power_bound: int = 200) -> dict:
    """Least ``m`` with ``(t1 t2)^(2m) = 1`` on the universe, if at most ``power_bound``."""
    universe = list(universe)
    order = permutation_order(lambda x: t(t(x, 2), 1), universe)
    m = order // math.gcd(order, 2)
    sigma_order = permutation_order(lambda x: sigma(sigma(x, 2), 1), universe)
    return {
        "suite": "braid-search",
        "universe_size": len(universe),
        "failure_count": 0,
        "failures": [],
        "witnesses": [],
        "t1t2_order": order,
        "sigma1sigma2_order": sigma_order,
        "m": m if m <= power_bound else None,
        "power_bound": power_bound,
    }


BRAID_WITNESS = "1 1 1 1 3'\n2 2 3'\n3"
T1T2_WITNESS = "1 1 2' 2 3\n2 3' 3\n3"


def counterexample_report(universe: Iterable[ShiftedTableau] = (), max_witnesses: int = 5) -> dict:
    """Non-relations: each must fail on its known witness (and on the universe, if given)."""
    checks = [
        ("(t1t2)^6 != 1", "t1 t2 t1 t2 t1 t2 t1 t2 t1 t2 t1 t2", ""),
        ("s1s2s1 != s2s1s2", "s1 s2 s1", "s2 s1 s2"),
    ]
    known = {checks[0][0]: ShiftedTableau.from_text(T1T2_WITNESS),
             checks[1][0]: ShiftedTableau.from_text(BRAID_WITNESS)}
    images = _Images()
    failures = []
    witnesses = []
    universe = list(universe)
    for name, lhs, rhs in checks:
        found = [known[name]] if _word_image(images, lhs, known[name]) != _word_image(images, rhs, known[name]) else []
        for tab in universe:
            if tab.n >= 3 and _word_image(images, lhs, tab) != _word_image(images, rhs, tab):
                found.append(tab)
        if not found:
            failures.append({"word": name, "tableau": known[name].to_text()})
        for tab in found[:max_witnesses]:
            witnesses.append({"word": name, "tableau": tab.to_text()})
    return {"suite": "sbk-counterexamples", "universe_size": len(universe),
            "failure_count": len(failures), "failures": failures, "witnesses": witnesses}


def verify_relations(suite: str, universe: Sequence[ShiftedTableau], jobs: int = 1,
                     power_bound: int = 200) -> dict:
    """Run one named suite; ``jobs > 1`` shards identity suites across processes."""
    if suite == "braid-search":
        return braid_search(universe, power_bound)
    if suite == "sbk-counterexamples":
        return counterexample_report(universe)
    if suite not in SUITES + EXTRA_SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + EXTRA_SUITES)}")
    universe = list(universe)
    if jobs <= 1 or len(universe) < 2 * jobs:
        return check_relations(suite, universe)
    from concurrent.futures import ProcessPoolExecutor

    shards = [universe[k::jobs] for k in range(jobs)]
    with ProcessPoolExecutor(jobs) as pool:
        parts = list(pool.map(check_relations, [suite] * jobs, shards))
    return {
        "suite": suite,
        "universe_size": sum(p["universe_size"] for p in parts),
        "failure_count": sum(p["failure_count"] for p in parts),
        "failures": [f for p in parts for f in p["failures"]][:MAX_LISTED],
        "witnesses": [],
    }
