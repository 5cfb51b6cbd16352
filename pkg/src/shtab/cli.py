"""Command-line front end: ``shtab compute|enumerate|verify|growth|orbit|lrcoef|switch|golden``."""

from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
from pathlib import Path
from typing import Callable

from . import bender_knuth as bk
from . import evacuation as ev
from . import growth
from .jdt import complement, rectify, row_reading_filler
from .shapes import ShapeError, SkewShape, StrictPartition
from .tableau import ShiftedTableau, TableauError, enumerate_tableaux, lr_coefficient, sstd, std
from .universe import skew_shapes, straight_shapes, tableaux


class CliError(Exception):
    """A validation failure reported as JSON with a nonzero exit code."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise CliError(message)


# ---------------------------------------------------------------- input


def read_tableau(source: str, n: int | None = None) -> ShiftedTableau:
    """A tableau from a file path, ``-`` (stdin) or inline text with ``/`` between rows.

    Files may hold the text form or the JSON form.
    """
    if source == "-":
        text = sys.stdin.read()
    elif Path(source).is_file():
        text = Path(source).read_text()
    else:
        text = source.replace("/", "\n")
    if text.lstrip().startswith("{"):
        tab = ShiftedTableau.from_json(text)
    else:
        tab = ShiftedTableau.from_text(text)
    return tab if n is None else tab.with_n(max(n, tab.n))


def _need(args, *names: str) -> None:
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise CliError(f"{args.command} needs {' '.join(missing)}")


def _shape(args) -> SkewShape:
    _need(args, "shape")
    return SkewShape.parse(args.shape)


# ---------------------------------------------------------------- output


def node_id(tab: ShiftedTableau) -> str:
    return "T" + hashlib.sha256(tab.to_text().encode()).hexdigest()[:12]


def _emit_tableau(tab: ShiftedTableau | None, fmt: str) -> str:
    if tab is None:
        return "null" if fmt == "json" else "undefined"
    return json.dumps(tab.to_json()) if fmt == "json" else tab.to_text()


def _write(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands


def _indices(args, *names: str) -> list[int]:
    _need(args, *names)
    return [getattr(args, x) for x in names]


def _operation(args) -> Callable[[ShiftedTableau], ShiftedTableau | None]:
    op = args.op
    table: dict[str, Callable] = {
        "std": std,
        "rectify": lambda x: rectify(x)[0],
        "complement": lambda x: complement(x, args.n),
        "evac": lambda x: ev.evac(x, route=args.route),
        "tilde-evac": ev.tilde_evac,
        "reversal": ev.reversal if args.route == "slides" else ev.reversal_switching,
        "eta": ev.eta,
    }
    if op in table:
        return table[op]
    if op == "sstd":
        _need(args, "nu")
        nu = [int(x) for x in args.nu.split(",")]
        return lambda x: sstd(x, nu)
    if op == "evac-k":
        (k,) = _indices(args, "k")
        return lambda x: ev.evac_k(x, k)
    if op in ("sigma", "t", "p", "q"):
        (i,) = _indices(args, "i")
        fn = {"sigma": ev.sigma, "t": bk.t, "p": bk.promotion, "q": bk.q}[op]
        return lambda x: fn(x, i)
    if op in ("eta-ij", "tilde-evac-ij", "q-ij"):
        i, j = _indices(args, "i", "j")
        fn = {"eta-ij": ev.eta_ij, "tilde-evac-ij": ev.tilde_evac_ij, "q-ij": bk.q_ij}[op]
        return lambda x: fn(x, i, j)
    raise CliError(f"unknown operation {op!r}")


OPERATIONS = ("std", "sstd", "rectify", "complement", "evac", "evac-k", "tilde-evac",
              "tilde-evac-ij", "reversal", "eta", "eta-ij", "sigma", "t", "p", "q", "q-ij")


def cmd_compute(args) -> str:
    _need(args, "input")
    tab = read_tableau(args.input, args.n)
    if (args.op is None) == (args.word is None):
        raise CliError("compute needs exactly one of --op and --word")
    fn = bk.GeneratorWord.parse(args.word) if args.word else _operation(args)
    return _emit_tableau(fn(tab), args.format)


def cmd_enumerate(args) -> str:
    _need(args, "n")
    tabs = enumerate_tableaux(_shape(args), args.n)
    if args.format == "json":
        return json.dumps([x.to_json() for x in tabs])
    return "\n\n".join(x.to_text() for x in tabs)


def _universe(args) -> list[ShiftedTableau]:
    _need(args, "n")
    if args.shape:
        return tableaux([SkewShape.parse(args.shape)], args.n)
    _need(args, "max_cells")
    shapes = list(straight_shapes(args.max_cells))
    if args.max_width:
        shapes += list(skew_shapes(args.max_cells, args.max_width))
    return tableaux(shapes, args.n)


def cmd_verify(args) -> str:
    _need(args, "suite")
    report = bk.verify_relations(args.suite, _universe(args), jobs=args.jobs,
                                 power_bound=args.power_bound)
    return json.dumps(report, indent=2)


def cmd_growth(args) -> str:
    _need(args, "input")
    tab = read_tableau(args.input)
    filler = read_tableau(args.filler) if args.filler else None
    kind = args.kind
    if kind in ("rect", "infusion"):
        if filler is None:
            filler = row_reading_filler(tab.shape.inner)
        _, _, grid = growth.infusion_growth(filler, tab)
        payload = grid
    elif kind == "evac":
        if args.k is not None:
            return _emit_tableau(growth.evac_k_growth(tab, args.k), args.format)
        payload = growth.evac_grid(growth.tableau_to_chain(tab))
    elif kind == "reversal":
        payload = growth.reversal_growth(tab, filler)[1]
    elif kind == "eta":
        i, j = _indices(args, "i", "j")
        payload = growth.eta_growth(tab, i, j, filler)[1]
    else:
        raise CliError(f"unknown growth kind {kind!r}")
    if args.format == "json":
        return json.dumps(payload.to_json())
    if isinstance(payload, growth.GrowthGrid):
        return payload.to_diamond() if args.layout == "diamond" else payload.to_text()
    blocks = [f"[{name}]\n" + (g.to_diamond() if args.layout == "diamond" else g.to_text())
              for name, g in payload.parts.items()]
    return "\n\n".join(blocks + ["[result]\n" + payload.result.to_text()])


def orbit_dot(universe: list[ShiftedTableau], gens: list[bk.Generator]) -> str:
    lines = ["digraph orbit {", "  node [shape=box, fontname=monospace];"]
    for tab in universe:
        label = tab.to_text().replace("\n", "\\n")
        lines.append(f'  {node_id(tab)} [label="{label}"];')
    for tab in universe:
        for g in gens:
            lines.append(f'  {node_id(tab)} -> {node_id(g(tab))} [label="{g}"];')
    lines.append("}")
    return "\n".join(lines)


def orbit_of(start: ShiftedTableau, gens: list[bk.Generator]) -> list[ShiftedTableau]:
    seen = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for tab in frontier:
            for g in gens:
                img = g(tab)
                if img not in seen:
                    seen[img] = None
                    nxt.append(img)
        frontier = nxt
    return sorted(seen)


def cmd_orbit(args) -> str:
    _need(args, "gens")
    gens = [bk.parse_generator(tok) for tok in re.split(r"[\s]+|,(?=[a-z])", args.gens.strip())]
    if args.input:
        universe = orbit_of(read_tableau(args.input, args.n), gens)
    else:
        universe = _universe(args)
    if args.format == "json":
        return json.dumps({
            "nodes": {node_id(x): x.to_text() for x in universe},
            "edges": [[node_id(x), str(g), node_id(g(x))] for x in universe for g in gens],
        })
    return orbit_dot(universe, gens)


def cmd_lrcoef(args) -> str:
    _need(args, "lam", "mu", "nu")
    lam, mu, nu = (StrictPartition.parse(x) for x in (args.lam, args.mu, args.nu))
    forward = lr_coefficient(lam, mu, nu)
    backward = lr_coefficient(lam, nu, mu)
    report = {"lam": list(lam), "mu": list(mu), "nu": list(nu),
              "f_lam_mu_nu": forward, "f_lam_nu_mu": backward, "symmetric": forward == backward}
    if args.format == "json":
        return json.dumps(report)
    return f"f({lam}; {mu}, {nu}) = {forward}\nf({lam}; {nu}, {mu}) = {backward}\nsymmetric: {report['symmetric']}"


def cmd_switch(args) -> str:
    """Perforated-pair switching, one line per switch, a-entries in brackets."""
    _need(args, "input")
    from .switching import PerforatedPair, switching_process

    a, b = args.i or 1, args.j or 2
    text = args.input
    if Path(text).is_file():
        text = Path(text).read_text()
    pair = PerforatedPair.from_text(text.replace("/", "\n"), a, b)
    problems = pair.problems()
    if problems:
        raise CliError("; ".join(problems))
    trace = switching_process(pair)
    if args.format == "json":
        return json.dumps([{"switch": name, "pair": p.to_text()} for name, p in trace])
    blocks = [pair.to_text(bracket_a=True)]
    blocks += [f"{name}\n{p.to_text(bracket_a=True)}" for name, p in trace]
    return "\n".join(blocks)


def cmd_golden(args) -> str:
    from .golden import replay

    results = replay()
    if args.format == "json":
        return json.dumps([{k: v for k, v in r.items() if k != "actual"} for r in results], indent=2)
    return "\n".join(f"{'PASS' if r['passed'] else 'FAIL'} {r['name']}"
                     + (f": {r['detail']}" if r["detail"] else "") for r in results)


COMMANDS = {
    "compute": cmd_compute,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "growth": cmd_growth,
    "orbit": cmd_orbit,
    "lrcoef": cmd_lrcoef,
    "switch": cmd_switch,
    "golden": cmd_golden,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shtab", description="Shifted tableau combinatorics toolkit.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--input", help="tableau file, '-' for stdin, or inline rows separated by '/'")
    parser.add_argument("--filler", help="standard filling of the inner shape (growth)")
    parser.add_argument("--op", choices=OPERATIONS)
    parser.add_argument("--word", help="generator word such as 't1 t2 q2,4 s1,3', applied right to left")
    parser.add_argument("--route", choices=("slides", "switching"), default="slides")
    parser.add_argument("--nu", help="weight for sstd, e.g. 2,4,1")
    parser.add_argument("--shape", help="strict partition 'lam' or skew shape 'lam/mu'")
    parser.add_argument("--n", type=int, help="alphabet size")
    parser.add_argument("--i", type=int)
    parser.add_argument("--j", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--suite", choices=bk.SUITES + bk.EXTRA_SUITES)
    parser.add_argument("--kind", choices=("rect", "infusion", "evac", "reversal", "eta"), default="rect")
    parser.add_argument("--layout", choices=("table", "diamond"), default="diamond")
    parser.add_argument("--gens", help="generators for orbit, e.g. t1,t2")
    parser.add_argument("--lam")
    parser.add_argument("--mu")
    parser.add_argument("--format", choices=("text", "json", "dot"), default="text")
    parser.add_argument("--dot", action="store_const", const="dot", dest="format")
    parser.add_argument("--out", help="write output here instead of stdout")
    parser.add_argument("--max-cells", type=int)
    parser.add_argument("--max-width", type=int, help="also include skew shapes with outer width up to this")
    parser.add_argument("--power-bound", type=int, default=200)
    parser.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _write(args, COMMANDS[args.command](args))
    except (CliError, ShapeError, TableauError, ValueError, OSError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(json.dumps(err) + "\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
