"""Worked examples with known answers, replayable as a regression corpus."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import bender_knuth as bk
from .evacuation import evac, reversal, reversal_switching, sigma, tilde_evac, tilde_evac_ij, tilde_evac_k
from .growth import (evac_growth, evac_k_growth, evac_semistandard_growth, eta_semistandard_growth,
                     infusion_growth)
from .jdt import complement, iter_slides, knuth_equivalent, rectify, row_reading_filler
from .shapes import Word
from .switching import (PerforatedPair, infusion, sp_ij, sw, sw_given, sw_via_infusion,
                        switch_step, switching_process)
from .evacuation import eta_ij
from .tableau import ShiftedTableau, sstd, std


def tab(text: str) -> ShiftedTableau:
    return ShiftedTableau.from_text(text)


def _pair_text(pair) -> str:
    return pair[0].to_text() + "\n--\n" + pair[1].to_text()


@dataclass
class Fixture:
    name: str
    compute: Callable[[], str]
    expected: str


def _first_difference(actual: str, expected: str) -> str:
    a_lines, e_lines = actual.splitlines(), expected.splitlines()
    for r, (a, e) in enumerate(zip(a_lines, e_lines), 1):
        a_tok, e_tok = a.split(), e.split()
        for k, (x, y) in enumerate(zip(a_tok, e_tok), 1):
            if x != y:
                return f"line {r}, token {k}: got {x!r}, expected {y!r}"
        if len(a_tok) != len(e_tok):
            return f"line {r}: got {len(a_tok)} tokens, expected {len(e_tok)}"
    return f"got {len(a_lines)} lines, expected {len(e_lines)}"


READING_T = "# 1 1 2' 2\n2 3'\n3"
REVERSAL_T = "# # # 1' 1\n# 1 1\n2 2\n3"
FIG6_T = "1 1 2' 2 3\n2 2 3'\n3"
BK_T = "1 1 1 2' 2\n2 2 3\n3"
BRAID_T = "1 1 1 1 3'\n2 2 3'\n3"
PAIR = "# # # 1' 1 2'\n# 1' 2' 2\n1 2 1"


def _fixtures() -> list[Fixture]:
    fx: list[Fixture] = []

    def add(name: str, expected: str):
        def deco(fn: Callable[[], str]):
            fx.append(Fixture(name, fn, expected))
            return fn
        return deco

    @add("word-canonical-form", "323'112'2 (2,3,2)")
    def _():
        w = Word.parse("3'23'112'2")
        return f"{w} {tuple(w.weight())}".replace(" ", "", 0).replace(", ", ",")

    @add("tableau-reading-word", "323'112'2")
    def _():
        return str(tab(READING_T).reading_word())

    @add("standardization", "1 2 3 6\n. 4 5\n. . 7")
    def _():
        return std(tab("1 1 2' 2\n2 2\n3")).to_text()

    @add("semistandardization", "1 1 2' 2\n. 2 2\n. . 3")
    def _():
        return sstd(tab("1 2 3 6\n4 5\n7"), (2, 4, 1)).to_text()

    @add("complement", "# # # 3'\n. 1 2' 3'\n. . 2 3'\n. . . 3")
    def _():
        return complement(tab("1 1 1 1\n2 2\n3")).to_text()

    @add("evacuation-by-slides",
         "# # 2' 3'\n. 1 2 3'\n. . 3 3\n"
         "# 1 2' 3'\n. 2 3' 3\n. . 3\n"
         "1 2' 3' 3\n. 2 3'\n. . 3")
    def _():
        steps = list(iter_slides(complement(tab("1 1 1 1\n2 2\n3"))))[1:]
        return "\n".join(s.to_text() for s in steps)

    @add("rectification-record", "1 1 1 1\n. 2 2\n. . 3\n[[4, 4], [1, 5], [3, 4], [2, 4]]")
    def _():
        r, rec = rectify(tab(REVERSAL_T))
        return r.to_text() + "\n" + str([list(c) for c in rec.cells])

    @add("reversal-by-slides", "# # # 2' 3'\n. # 1 3'\n. . 2 3'\n. . . 3")
    def _():
        return reversal(tab(REVERSAL_T)).to_text()

    @add("reversal-switching-first-step",
         "1 1 1 1\n. 2 2\n. . 3\n--\n# # # # 3\n. # # 1\n. . # 2\n. . . 4")
    def _():
        return _pair_text(sw(row_reading_filler((3, 1)), tab(REVERSAL_T)))

    @add("reversal-by-switching", "# # # 2' 3'\n. # 1 3'\n. . 2 3'\n. . . 3")
    def _():
        return reversal_switching(tab(REVERSAL_T), tab("1 2 3\n4")).to_text()

    @add("perforated-pair-switching",
         "S5 S1 S5 S1 S5\n# # # 2' 1' 1\n. # 2' 2 1'\n. . 2 1 1")
    def _():
        trace = switching_process(PerforatedPair.from_text(PAIR))
        return " ".join(n for n, _ in trace) + "\n" + trace[-1][1].to_text()

    @add("wrong-switch-breaks-tableau", "S6 False\n# # 2 2\n. 1 1'")
    def _():
        bad, name = switch_step(PerforatedPair.from_text("# # 1' 2\n1 2"), (1, 3))
        return f"{name} {bad.filling().is_semistandard()}\n{bad.to_text()}"

    sw_s, sw_t = "1 1 2'\n2", "# # # 1 2'\n# 1 2\n2 3"

    @add("tableau-switching", "1 1 2'\n. 2 2\n. . 3\n--\n# # # 1' 2'\n. # # 1\n. . # 2")
    def _():
        return _pair_text(sw(tab(sw_s), tab(sw_t)))

    @add("switching-via-infusion", "1 1 2'\n. 2 2\n. . 3\n--\n# # # 1' 2'\n. # # 1\n. . # 2")
    def _():
        return _pair_text(sw_via_infusion(tab(sw_s), tab(sw_t)))

    @add("infusion", "1 2 3\n. 4 5\n. . 6\n--\n# # # 1 3\n. # # 2\n. . # 4")
    def _():
        return _pair_text(infusion(tab("1 2 3\n4"), tab("# # # 2 3\n# 1 5\n4 6")))

    @add("evacuation-by-switching", "1 1 1 2' 2\n. 2 2 3\n. . 3")
    def _():
        return evac(tab(FIG6_T), route="switching").to_text()

    @add("evacuation-routes-agree", "1 1 1 2' 2\n. 2 2 3\n. . 3")
    def _():
        return evac(tab(FIG6_T)).to_text()

    @add("tilde-evac-skew", "# # # 2 3\n. # 1 3'\n. . 2 3'\n. . . 3")
    def _():
        return tilde_evac(tab(REVERSAL_T)).to_text()

    @add("sp-2-3", "1 1 3' 3 2'\n. 3 2' 2\n. . 2")
    def _():
        return sp_ij(tab(FIG6_T), 2, 3).to_text()

    @add("sp-2-3-switch-chain", "S6 S4 S1 S1")
    def _():
        pair = PerforatedPair.from_tableau(tab(FIG6_T), 2, 3)
        return " ".join(name for name, _ in switching_process(pair))

    @add("sw-1-through-2-3", "2 2 2 2 3\n. 1 1 3'\n. . 3\n2 2 2 2 3\n. 3 3 1\n. . 1")
    def _():
        t = tab(FIG6_T)
        return sw_given(t, 1, [2]).to_text() + "\n" + sw_given(t, 1, [2, 3]).to_text()

    @add("bender-knuth-t1", "1 1 1 1 2\n. 2 2 3\n. . 3")
    def _():
        return bk.t(tab(BK_T), 1).to_text()

    @add("bender-knuth-t2", "1 1 1 3' 3\n. 2 2 3'\n. . 3")
    def _():
        return bk.t(tab(BK_T), 2).to_text()

    @add("t1-via-infusion", "1 1 1 1 2\n. 2 2 3\n. . 3")
    def _():
        t = tab(BK_T)
        one, two = t.restrict(1, 1), t.restrict(2, 2).relabel(lambda x: x._replace(value=1), 1)
        moved_two, moved_one = sw(one, two)
        ent = t.entries
        ent.update({c: x._replace(value=1) for c, x in moved_two.items()})
        ent.update({c: x._replace(value=2) for c, x in moved_one.items()})
        return ShiftedTableau(t.shape, ent, t.n).to_text()

    @add("t2-not-coplactic",
         "True False\n# # 1' 2 2\n. 1 1 3' 3\n. . 3 3")
    def _():
        t1, t2 = tab(BK_T), tab("# # 1' 2' 2\n1 1 2 3\n2 3")
        before = knuth_equivalent(t1.reading_word(), t2.reading_word())
        after = knuth_equivalent(bk.t(t1, 2).reading_word(), bk.t(t2, 2).reading_word())
        return f"{before} {after}\n{bk.t(t2, 2).to_text()}"

    @add("sigma-2-switching-step",
         "2 2 2 2\n. 3 3\n--\n# # # # 3\n. # # 1\n. . 2")
    def _():
        part = tab(BK_T).restrict(2, 3)
        return _pair_text(sw(row_reading_filler((3,)), part))

    @add("sigma-2", "# # # 2 3'\n. 2 3' 3\n. . 3\n1 1 1 2 3'\n. 2 3' 3\n. . 3")
    def _():
        t = tab(BK_T)
        return sigma(t, 2).restrict(2, 3).to_text() + "\n" + sigma(t, 2).to_text()

    @add("braid-relation-fails",
         "1 1 1 2 3\n. 2 3' 3\n. . 3\n1 1 1 2' 3'\n. 2 3' 3\n. . 3")
    def _():
        t = tab(BRAID_T)
        return bk.evaluate("s1 s2 s1", t).to_text() + "\n" + bk.evaluate("s2 s1 s2", t).to_text()

    @add("t1t2-sixth-power-chain",
         "1 1 2 2 2\n. 2 3' 3\n. . 3\n"
         "1 1 1 1 2'\n. 2 3' 3\n. . 3\n"
         "1 1 1 1 3'\n. 2 2 2\n. . 3\n"
         "1 1 1 2' 3'\n. 2 2 2\n. . 3\n"
         "1 1 1 2' 3'\n. 2 3' 3\n. . 3\n"
         "1 1 2 2 3'\n. 2 3' 3\n. . 3\n"
         "1 1 2' 2 3\n. 2 2 3\n. . 3\n"
         "1 1 1 1 3\n. 2 2 3\n. . 3\n"
         "1 1 1 1 2\n. 2 2 3'\n. . 3\n"
         "1 1 1 2' 2\n. 2 2 3'\n. . 3\n"
         "1 1 1 3' 3\n. 2 2 3\n. . 3\n"
         "1 1 2' 3' 3\n. 2 2 3\n. . 3")
    def _():
        x = tab(bk.T1T2_WITNESS)
        out = []
        for k in range(12):
            x = bk.t(x, 2 if k % 2 == 0 else 1)
            out.append(x.to_text())
        return "\n".join(out)

    @add("tilde-evac-2-3-vs-conjugate",
         "1 1 1 1 2'\n. 2 2 3\n. . 3\n1 1 1 1 2\n. 2 2 3'\n. . 3")
    def _():
        t = tab(BRAID_T)
        a = tilde_evac_ij(t, 2, 3)
        b = tilde_evac_k(tilde_evac_k(tilde_evac_k(t, 3), 2), 3)
        return a.to_text() + "\n" + b.to_text()

    chain_t = "# # # 1 3\n# 2 5\n4"

    @add("rectification-orders-agree", "1 2 3 5\n. 4\n1 2 3 5\n. 4")
    def _():
        t = tab(chain_t)
        a = rectify(t, tab("1 2 3\n4"))[0]
        b = rectify(t, tab("1 2 4\n3"))[0]
        return a.to_text() + "\n" + b.to_text()

    @add("growth-rectification-table",
         "  3.1   4.1   4.2   5.2 5.2.1 5.3.1\n"
         "    3     4   4.1   5.1   5.2   5.3\n"
         "    2     3   3.1   4.1   4.2   4.3\n"
         "    1     2   2.1   3.1   3.2   4.2\n"
         "    0     1     2     3   3.1   4.1")
    def _():
        return infusion_growth(tab("1 2 3\n4"), tab(chain_t))[2].to_text()

    @add("growth-infusion", "1 2 3 5\n. 4\n--\n# # # # 3\n. # 1 2\n. . 4")
    def _():
        x, y, _ = infusion_growth(tab("1 2 3\n4"), tab(chain_t))
        return _pair_text((x, y))

    @add("growth-evacuation", "1 2 3 7\n. 4 5\n. . 6\n1 2 4 5\n. 3 6\n. . 7")
    def _():
        t = tab("1 2 3 5\n4 6\n7")
        return evac_growth(t).to_text() + "\n" + evac_k_growth(t, 4).to_text()

    @add("growth-evacuation-semistandard", "1 1 1 3\n. 2 2\n. . 3")
    def _():
        return evac_semistandard_growth(tab("1 1 2' 3'\n2 3'\n3")).to_text()

    eta_t = "# # 1 2\n1 2 3'\n3 3"

    @add("eta-2-3-pipeline",
         "# # 2 4\n. 1 3 5\n. . 6 7\n"
         "1 2 4 7\n. 3 5\n. . 6\n--\n# # # #\n. # # 1\n. . # 2\n"
         "1 2 3 6\n. 4 5\n. . 7\n"
         "# # 2 3\n. 1 4 6\n. . 5 7\n"
         "# # 1 2'\n. 1 2' 3'\n. . 2 3")
    def _():
        s = std(tab(eta_t))
        rect, moved = infusion(tab("1 2"), s)
        flipped = eta_ij(rect, 3, 7)
        _, back = infusion(flipped, moved)
        return "\n".join([s.to_text(), _pair_text((rect, moved)), flipped.to_text(), back.to_text(),
                          eta_semistandard_growth(tab(eta_t), 2, 3).to_text()])

    return fx


FIXTURES = _fixtures()


def replay() -> list[dict]:
    """Run every fixture; each report says whether it passed and where it first differs."""
    out = []
    for f in FIXTURES:
        start = time.perf_counter()
        try:
            actual = f.compute()
            error = None
        except Exception as exc:  # reported, not raised
            actual, error = "", f"{type(exc).__name__}: {exc}"
        ok = error is None and actual == f.expected
        out.append({
            "name": f.name,
            "passed": ok,
            "seconds": time.perf_counter() - start,
            "detail": "" if ok else (error or _first_difference(actual, f.expected)),
            "actual": actual,
        })
    return out
