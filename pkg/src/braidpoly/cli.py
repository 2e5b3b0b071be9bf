"""Command-line front end.

Exit codes: 0 on success, 1 when a verification suite fails, 2 on bad
input, 3 when the skein budget runs out.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import coloring as col
from . import verify
from .braid import BraidError, parse
from .diagram import Diagram, DiagramError, closure, conway_triple
from .homfly import DEFAULT_MAX_NODES, SkeinBudget, SkeinBudgetExceeded, conway, homfly
from .invariant import InvariantReport, report

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
DEFAULT_SEED = 0
DEFAULT_SAMPLES = 20


class InputError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidpoly", description="Coloring invariant of link diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, needs_input: bool = True) -> None:
        if needs_input:
            p.add_argument("--braid", help='braid word, e.g. "1 -2 1"')
            p.add_argument("--strands", type=int, help="number of strands for --braid")
            p.add_argument("--diagram", metavar="PATH", help="JSON diagram file (braid or explicit form)")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES, help="skein tree node cap")

    p = sub.add_parser("compute", help="full invariant report")
    common(p)
    p.add_argument("--k", type=int, action="append", help="restrict per_k to these k (repeatable)")
    p = sub.add_parser("homfly", help="HOMFLY-PT polynomial")
    common(p)
    p = sub.add_parser("conway", help="Conway polynomial")
    common(p)
    p = sub.add_parser("colorings", help="coloring class sizes per number of special crossings")
    common(p)
    p.add_argument("--k", type=int, default=2)
    p = sub.add_parser("triple", help="reports for the Conway triple at one crossing")
    common(p)
    p.add_argument("--crossing", type=int, required=True)
    p.add_argument("--k", type=int, action="append")
    p = sub.add_parser("verify", help="run the randomized property suites")
    common(p, needs_input=False)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--suite", action="append", choices=sorted(verify.SUITES))
    return parser


def read_input(args: argparse.Namespace) -> tuple[Diagram, dict]:
    if (args.braid is None) == (args.diagram is None):
        raise InputError("give exactly one of --braid or --diagram")
    if args.braid is not None:
        if args.strands is None:
            raise InputError("--braid needs --strands")
        try:
            word = parse(args.braid, args.strands)
        except BraidError as exc:
            raise InputError(str(exc)) from exc
        if word.singular_count:
            raise InputError("singular letters cannot be closed into a diagram")
        return closure(word), {"strands": word.strands, "word": list(word.to_ints())}
    if args.strands is not None:
        raise InputError("--strands only applies to --braid")
    try:
        with open(args.diagram, encoding="utf-8") as fh:
            data = json.load(fh)
        d = Diagram.from_dict(data)
    except (OSError, json.JSONDecodeError, DiagramError, BraidError) as exc:
        raise InputError(f"cannot read diagram: {exc}") from exc
    return d, data


def _dump(obj, out: TextIO) -> None:
    json.dump(obj, out, indent=2, sort_keys=True)
    out.write("\n")


def _report_text(r: InvariantReport, out: TextIO, indent: str = "") -> None:
    out.write(f"{indent}crossings: {r.crossings}\n")
    out.write(f"{indent}components: {r.components}\n")
    out.write(f"{indent}writhe: {r.writhe}\n")
    out.write(f"{indent}I: {r.I}\n")
    for k, p in sorted(r.per_k.items()):
        out.write(f"{indent}I_{k}: {p}\n")
    out.write(f"{indent}J: {r.J}\n")
    out.write(f"{indent}homfly: {r.homfly}\n")
    out.write(f"{indent}conway: {r.conway}\n")


def _check_k(ks) -> None:
    for k in ks or ():
        if k < 2:
            raise InputError("--k must be at least 2")


def _run(args: argparse.Namespace, out: TextIO) -> int:
    if args.max_nodes < 1:
        raise InputError("--max-nodes must be positive")
    budget = SkeinBudget(args.max_nodes)
    structured = args.format == "structured"

    if args.command == "verify":
        if args.samples < 0:
            raise InputError("--samples must be nonnegative")
        results = verify.run_all(args.seed, args.samples, budget, args.suite)
        if structured:
            _dump({
                "seed": args.seed,
                "samples": args.samples,
                "suites": [
                    {"name": r.name, "checks": r.checks, "passed": r.passed, "failures": r.failures}
                    for r in results
                ],
            }, out)
        else:
            for r in results:
                out.write(r.line() + "\n")
                for f in r.failures:
                    out.write(f"  {f}\n")
        return EXIT_OK if all(r.ok for r in results) else EXIT_FAILED

    d, desc = read_input(args)
    if d.is_empty():
        raise InputError("the empty diagram has no invariants")
    if args.command == "compute":
        _check_k(args.k)
        r = report(d, desc, args.k, budget=budget)
        if structured:
            _dump(r.to_dict(), out)
        else:
            _report_text(r, out)
    elif args.command in ("homfly", "conway"):
        poly = homfly(d, budget) if args.command == "homfly" else conway(d, budget)
        if structured:
            _dump({"input": desc, args.command: poly.to_records()}, out)
        else:
            out.write(f"{poly}\n")
    elif args.command == "colorings":
        _check_k([args.k])
        sizes = {c.j: len(c) for c in col.enumerate_colorings(d, args.k)}
        if structured:
            _dump({"input": desc, "k": args.k, "classes": {str(j): n for j, n in sizes.items()}}, out)
        else:
            for j, n in sizes.items():
                out.write(f"j={j}: {n}\n")
            out.write(f"total: {sum(sizes.values())}\n")
    elif args.command == "triple":
        _check_k(args.k)
        try:
            triple = conway_triple(d, args.crossing)
        except (KeyError, DiagramError) as exc:
            raise InputError(f"no crossing {args.crossing}") from exc
        parts = [("d_plus", triple.d_plus), ("d_minus", triple.d_minus), ("d_zero", triple.d_zero)]
        if structured:
            _dump({
                "input": desc,
                "crossing": args.crossing,
                **{name: report(e, None, args.k, budget=budget).to_dict() for name, e in parts},
            }, out)
        else:
            for name, e in parts:
                out.write(f"{name}:\n")
                _report_text(report(e, None, args.k, budget=budget), out, "  ")
    return EXIT_OK


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _run(args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SkeinBudgetExceeded as exc:
        err.write(f"budget exceeded: {exc}; raise --max-nodes\n")
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())
