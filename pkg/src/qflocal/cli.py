"""Command-line front end.

Subcommands: count, density, series, verify, table.  All numeric output
is exact (integers and reduced fractions); there is no floating point
anywhere in the tool.

Exit codes: 0 ok, 1 verification failure or non-stabilisation, 2 usage or
parse error, 3 budget exceeded, 4 unsupported singular target.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import verify as verify_mod
from .closed_counts import count_lattice_info
from .compose import StratifiedRefusal
from .densities import (
    NonStabilizationError,
    SingularTargetError,
    density,
    density_q,
)
from .genseries import format_series, series_h0, series_h1
from .lattice import L3, LatticeError, ScaledH0, ScaledH1, TypeI, parse_lattice, single
from .oracle import BudgetExceeded, EnumBudget

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_SINGULAR = 4

BUDGET_ENV = "QFLOCAL_MAX_STATES"


def _resolve_budget(args) -> EnumBudget:
    """Flag wins over environment, environment over the default."""
    if args.budget is not None:
        return EnumBudget(args.budget)
    env = os.environ.get(BUDGET_ENV)
    if env:
        return EnumBudget(int(env))
    return EnumBudget()


def _fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _cmd_count(args) -> int:
    budget = _resolve_budget(args)
    spec = parse_lattice(args.lattice, args.p)
    result = count_lattice_info(spec, args.m, args.t, budget)
    payload = {
        "command": "count",
        "lattice": str(spec),
        "p": args.p,
        "m": args.m,
        "t": args.t,
        "count": result.count,
        "provenance": result.provenance,
    }
    _emit(args, payload, f"{result.count}  [{result.provenance}]")
    return EXIT_OK


def _cmd_density(args) -> int:
    budget = _resolve_budget(args)
    spec = parse_lattice(args.lattice, args.p)
    if args.normalization == "q":
        result = density_q(spec, args.t, budget, engine=args.engine,
                           max_level=args.max_level)
    else:
        result = density(spec, args.t, budget, engine=args.engine,
                         max_level=args.max_level)
    payload = {
        "command": "density",
        "lattice": str(spec),
        "p": args.p,
        "t": args.t,
        "result": result.to_json(args.normalization),
    }
    if (
        args.engine == "stratified"
        and len(spec.blocks) > 1
        and hasattr(result, "stabilized_at")
    ):
        from .compose import convolve_stratified

        head, last = spec.head_and_last()
        target = 2 * args.t if args.normalization == "q" else args.t
        breakdown = convolve_stratified(head, last, result.stabilized_at, target, budget)
        payload["strata"] = breakdown.to_json()["strata"]
    if hasattr(result, "alpha"):
        text = (
            f"{_fraction_str(result.alpha)}  "
            f"[{result.provenance}, stabilized at m={result.stabilized_at}]"
        )
    elif hasattr(result, "description"):
        text = f"diverges: {result.description}"
    else:
        values = ", ".join(_fraction_str(v) for v in result.accumulation_values)
        text = f"oscillates between {values}"
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_series(args) -> int:
    spec = parse_lattice(args.lattice, args.p)
    if len(spec.blocks) != 1:
        print("series: only single H0/H1 blocks are supported", file=sys.stderr)
        return EXIT_USAGE
    block = spec.blocks[0]
    if isinstance(block, ScaledH0):
        series = series_h0(args.p, block.e, args.t)
    elif isinstance(block, ScaledH1) and block.e == 0:
        series = series_h1(args.t)
    else:
        print("series: only single H0/H1 blocks are supported", file=sys.stderr)
        return EXIT_USAGE
    coeffs = series.coefficients(args.coeffs)
    payload = {
        "command": "series",
        "lattice": str(spec),
        "p": args.p,
        "t": args.t,
        "series": series.to_json(),
        "coefficients": [
            {"m": m, "num": c.numerator, "den": c.denominator}
            for m, c in enumerate(coeffs, start=1)
        ],
    }
    text = format_series(series) + "\n" + "coefficients 1..{}: {}".format(
        args.coeffs, ", ".join(_fraction_str(c) for c in coeffs)
    )
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    budget = _resolve_budget(args)
    names = []
    for chunk in args.suite:
        names.extend(s.strip() for s in chunk.split(",") if s.strip())
    if not names or "all" in names:
        names = list(verify_mod.SUITES)
    opts = {}
    if args.d is not None:
        opts["ds"] = (args.d,)
    if args.nmax is not None:
        opts["ns"] = tuple(range(3, args.nmax + 1))
    if args.a is not None:
        opts["targets"] = (args.a,)
    if args.states is not None:
        opts["state_cap"] = args.states

    results = []
    for name in names:
        if name not in verify_mod.SUITES:
            print(f"verify: unknown suite {name!r}", file=sys.stderr)
            return EXIT_USAGE
        suite_opts = {
            k: v
            for k, v in opts.items()
            if k in {"ds", "ns", "targets"} and name == "halflift"
            or k == "state_cap" and name == "oracle"
        }
        results.extend(verify_mod.SUITES[name](budget, **suite_opts))

    results.sort(key=lambda r: (r.suite, r.instance))
    counts = verify_mod.summarize(results)
    ok = counts["fail"] == 0
    payload = {
        "command": "verify",
        "suites": names,
        "results": [r.to_json() for r in results],
        "counts": counts,
        "ok": ok,
    }
    if args.format == "text":
        for r in results:
            line = f"{r.status.upper():5s} {r.suite}: {r.instance}"
            if r.status != "pass" and r.detail:
                line += f"  ({r.detail})"
            print(line)
        print(
            f"{counts['pass']} passed, {counts['fail']} failed, "
            f"{counts['skip']} skipped"
        )
    else:
        print(json.dumps(payload))
    return EXIT_OK if ok else EXIT_VERIFY


_L3_COLUMNS = (1, 2, 3, 5, 6, 7)


def _cmd_table(args) -> int:
    budget = _resolve_budget(args)
    family = args.family.lower()
    norm = args.normalization
    rows = []

    def cell(spec, target):
        if norm == "q":
            result = density_q(spec, target, budget)
        else:
            result = density(spec, target, budget)
        return result.alpha

    if family == "l3":
        spec = single(L3(), 2)
        header = [f"a0%8={c}" for c in _L3_COLUMNS]
        for k in range(args.kmax + 1):
            values = []
            for a0 in _L3_COLUMNS:
                t = 2 * 4**k * a0 if norm == "Q" else 4**k * a0
                values.append(cell(spec, t))
            rows.append((f"k={k}", values))
    elif family in ("h0", "h1", "typei"):
        p = args.p
        units = (1, 3, 5, 7) if p == 2 else tuple(u for u in (1, 2) if u % p)
        if family == "h0":
            spec = single(ScaledH0(args.e), p)
        elif family == "h1":
            spec = single(ScaledH1(args.e), 2)
        else:
            spec = single(TypeI(args.a, args.u), 2)
        header = [f"unit={u}" for u in units]
        for v in range(args.vmax + 1):
            values = [cell(spec, p**v * u) for u in units]
            rows.append((f"v={v}", values))
    else:
        print(f"table: unknown family {args.family!r}", file=sys.stderr)
        return EXIT_USAGE

    payload = {
        "command": "table",
        "family": family,
        "normalization": norm,
        "columns": header,
        "rows": [
            {"label": label, "values": [{"num": v.numerator, "den": v.denominator} for v in values]}
            for label, values in rows
        ],
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        width = max(len(h) for h in header) + 2
        print(" " * 8 + "".join(h.rjust(width) for h in header))
        for label, values in rows:
            print(label.ljust(8) + "".join(_fraction_str(v).rjust(width) for v in values))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qflocal",
        description="Exact congruence counts and local densities for quadratic lattices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--budget", type=int, default=None,
                       help=f"enumeration state cap (overrides ${BUDGET_ENV})")

    p_count = sub.add_parser("count", help="finite-level representation count")
    p_count.add_argument("--lattice", required=True)
    p_count.add_argument("--p", type=int, default=2)
    p_count.add_argument("--m", type=int, required=True)
    p_count.add_argument("--t", type=int, required=True)
    common(p_count)
    p_count.set_defaults(fn=_cmd_count)

    p_density = sub.add_parser("density", help="local representation density")
    p_density.add_argument("--lattice", required=True)
    p_density.add_argument("--p", type=int, default=2)
    p_density.add_argument("--t", type=int, required=True)
    p_density.add_argument("--normalization", choices=("Q", "q"), default="Q")
    p_density.add_argument("--engine", choices=("naive", "stratified"), default="naive")
    p_density.add_argument("--max-level", type=int, default=None)
    common(p_density)
    p_density.set_defaults(fn=_cmd_density)

    p_series = sub.add_parser("series", help="generating series of the level counts")
    p_series.add_argument("--lattice", required=True)
    p_series.add_argument("--p", type=int, default=2)
    p_series.add_argument("--t", type=int, required=True)
    p_series.add_argument("--coeffs", type=int, default=8)
    common(p_series)
    p_series.set_defaults(fn=_cmd_series)

    p_verify = sub.add_parser("verify", help="run finite-level verification suites")
    p_verify.add_argument("--suite", action="append", default=[],
                          help="suite name, 'all', or comma-separated list")
    p_verify.add_argument("--d", type=int, default=None)
    p_verify.add_argument("--nmax", type=int, default=None)
    p_verify.add_argument("--a", type=int, default=None)
    p_verify.add_argument("--states", type=int, default=None,
                          help="state cap for the oracle equivalence sweep")
    p_verify.add_argument("--format", choices=("text", "json"), default="json")
    p_verify.add_argument("--budget", type=int, default=None)
    p_verify.set_defaults(fn=_cmd_verify)

    p_table = sub.add_parser("table", help="density grids per block family")
    p_table.add_argument("--family", required=True,
                         help="one of h0, h1, typei, l3")
    p_table.add_argument("--p", type=int, default=2)
    p_table.add_argument("--e", type=int, default=0)
    p_table.add_argument("--a", type=int, default=0)
    p_table.add_argument("--u", type=int, default=1)
    p_table.add_argument("--kmax", type=int, default=2)
    p_table.add_argument("--vmax", type=int, default=6)
    p_table.add_argument("--normalization", choices=("Q", "q"), default="Q")
    common(p_table)
    p_table.set_defaults(fn=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SingularTargetError as exc:
        print(f"singular target: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except NonStabilizationError as exc:
        print(f"no stabilisation: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (LatticeError, StratifiedRefusal, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
