"""Command-line entry point.

Every subcommand prints one JSON report with the fields ``command``,
``inputs``, ``result`` and ``version``.  Exit codes: 0 on success, 1 when a
domain precondition fails, 2 on usage errors (including malformed polygon
text), 3 when ``--max-candidates`` is exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .extensions import ext_contains, ext_enumerate, hong_conditions, tilde_ext_contains
from .interpolation import interpolate_constant, interpolate_general
from .kottwitz import iter_kottwitz
from .minute import fully_hn_gl, fully_hn_typeA, weakly_fully_hn_gl, weakly_fully_hn_typeA
from .polygon import Polygon, PolygonSyntaxError, canonical_order, dual, leq_dominance, parse
from .strata import StrataConfig, StratumRecord, stratification_report, stratum_status

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class LimitExceeded(Exception):
    pass


def _polygon_arg(text: str) -> Polygon:
    try:
        return parse(text)
    except PolygonSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _mu_arg(text: str) -> tuple[int, ...]:
    """Accept block form ``(1^(3),0^(3))`` or a plain list ``(1,1,1,0,0,0)``."""
    try:
        coords = parse(text).coords
    except PolygonSyntaxError:
        body = text.strip().strip("()")
        try:
            coords = tuple(Fraction(x) for x in body.split(",")) if body.strip() else ()
        except ValueError:
            raise argparse.ArgumentTypeError(f"cannot read cocharacter {text!r}") from None
    if any(x.denominator != 1 for x in coords):
        raise argparse.ArgumentTypeError("cocharacter entries must be integers")
    return tuple(int(x) for x in coords)


def _fmt(x: Fraction) -> str:
    return str(x)


def _polys(items) -> list[str]:
    return [str(p) for p in items]


def _bounded(items, limit: int | None) -> list:
    out = []
    for item in items:
        out.append(item)
        if limit is not None and len(out) > limit:
            raise LimitExceeded(f"more than {limit} results; raise --max-candidates")
    return out


# -- subcommands ----------------------------------------------------------


def _cmd_polygon(args) -> Any:
    p = args.polygon
    result = {
        "canonical": str(p),
        "rank": p.rank,
        "degree": _fmt(p.degree),
        "coords": [_fmt(x) for x in p.coords],
        "breakpoints": [[l, _fmt(v)] for l, v in p.breakpoints],
        "integral_breakpoints": p.integral_breakpoints,
        "dual": str(dual(p)),
    }
    if args.compare is not None:
        result["below"] = leq_dominance(p, args.compare)
    return result


def _cmd_kottwitz(args) -> Any:
    found = _bounded(iter_kottwitz(args.n, args.k, args.delta), args.max_candidates)
    found = canonical_order(found)
    return {"count": len(found), "polygons": _polys(found)}


def _witness_json(w) -> Any:
    if w is None:
        return None
    return {
        "h_positions": list(w.h_positions),
        "k_positions": list(w.k_positions),
        "b_vector": [_fmt(x) for x in w.b_vector],
    }


def _cmd_tilde_ext(args) -> Any:
    w = tilde_ext_contains(args.a, args.c, args.d)
    sub, quot, below = hong_conditions(args.a, args.c, args.d)
    return {
        "member": w is not None,
        "witness": _witness_json(w),
        "necessary_conditions": {"sub": sub, "quotient": quot, "below_sum": below},
    }


def _cmd_ext_enum(args) -> Any:
    found = _bounded(ext_enumerate(args.c, args.d), args.max_candidates)
    return _polys(found)


def _cmd_ext_test(args) -> Any:
    return {"member": ext_contains(args.a, args.c, args.d)}


def _cmd_interpolate(args) -> Any:
    fn = interpolate_constant if args.method == "constant" else interpolate_general
    return {"b": str(fn(args.a, args.c, args.m))}


def _record_json(rec: StratumRecord) -> Any:
    w = rec.witness
    return {
        "nu_b_prime": str(rec.nu_b_prime),
        "nonempty": rec.nonempty,
        "hn_decomposable": rec.hn_decomposable,
        "wa_status": rec.wa_status.value if rec.wa_status else None,
        "cuts": list(rec.cuts),
        "witness": None
        if w is None
        else {"m": w.m, "s": w.s, "x1": str(w.x1), "x2": str(w.x2), "sub": str(w.sub), "quotient": str(w.quotient)},
    }


def _cmd_strata(args) -> Any:
    cfg = StrataConfig(args.n, args.r)
    if args.nu is not None:
        return _record_json(stratum_status(cfg, args.nu))
    # Count the strata before classifying any of them.
    _bounded(iter_kottwitz(cfg.n, 0, cfg.delta), args.max_candidates)
    report = stratification_report(cfg)
    if args.summary:
        return report.summary
    return {"delta": str(cfg.delta), "summary": report.summary, "records": [_record_json(r) for r in report.records]}


def _cmd_minute(args) -> Any:
    if args.mode == "gl":
        if args.mu is None:
            raise ValueError("--mu is required in gl mode")
        n = args.n if args.n is not None else len(args.mu)
        fn = fully_hn_gl if args.which == "full" else weakly_fully_hn_gl
        res = fn(n, args.mu)
    else:
        if args.n is None or args.i is None:
            raise ValueError("--n and --i are required in typeA mode")
        fn = fully_hn_typeA if args.which == "full" else weakly_fully_hn_typeA
        res = fn(args.n, args.i, args.iprime)
    return {"holds": res.holds, "violations": list(res.violations)}


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="render an aligned table instead of JSON")
    bounded = argparse.ArgumentParser(add_help=False)
    bounded.add_argument("--max-candidates", type=int, default=None, metavar="N")

    parser = argparse.ArgumentParser(prog="newton-strata", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("polygon", parents=[common], help="normalize and describe a polygon")
    p.add_argument("polygon", type=_polygon_arg)
    p.add_argument("--compare", type=_polygon_arg, help="also test dominance against this polygon")
    p.set_defaults(func=_cmd_polygon)

    p = sub.add_parser("kottwitz", parents=[common, bounded], help="enumerate B(GL_n, k, delta)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=_polygon_arg, required=True)
    p.set_defaults(func=_cmd_kottwitz)

    for name, func, help_ in (
        ("tilde-ext", _cmd_tilde_ext, "combinatorial extension test with witness"),
        ("ext-test", _cmd_ext_test, "exact extension membership"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--a", type=_polygon_arg, required=True)
        p.add_argument("--c", type=_polygon_arg, required=True, help="quotient side")
        p.add_argument("--d", type=_polygon_arg, required=True, help="sub side")
        p.set_defaults(func=func)

    p = sub.add_parser("ext-enum", parents=[common, bounded], help="enumerate Ext(c, d)")
    p.add_argument("--c", type=_polygon_arg, required=True, help="quotient side")
    p.add_argument("--d", type=_polygon_arg, required=True, help="sub side")
    p.set_defaults(func=_cmd_ext_enum)

    p = sub.add_parser("interpolate", parents=[common], help="integral vector between c and a")
    p.add_argument("--a", type=_polygon_arg, required=True)
    p.add_argument("--c", type=_polygon_arg, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=("general", "constant"), default="general")
    p.set_defaults(func=_cmd_interpolate)

    p = sub.add_parser("strata", parents=[common, bounded], help="classify Newton strata")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--nu", type=_polygon_arg, help="classify this stratum only")
    p.add_argument("--summary", action="store_true", help="print only the counts")
    p.set_defaults(func=_cmd_strata)

    p = sub.add_parser("minute", parents=[common], help="minute criteria")
    p.add_argument("--mode", choices=("gl", "typeA"), required=True)
    p.add_argument("--which", choices=("full", "weak"), default="weak")
    p.add_argument("--n", type=int)
    p.add_argument("--mu", type=_mu_arg)
    p.add_argument("--i", type=int)
    p.add_argument("--iprime", type=int, default=0)
    p.set_defaults(func=_cmd_minute)
    return parser


def _inputs(args) -> dict:
    skip = {"func", "command", "pretty"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip or value is None:
            continue
        if isinstance(value, Polygon):
            value = str(value)
        elif isinstance(value, tuple):
            value = list(value)
        out[key] = value
    return out


# -- rendering ------------------------------------------------------------


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows)


def render_pretty(report: dict) -> str:
    result = report["result"]
    head = f"{report['command']}  (version {report['version']})"
    if isinstance(result, list):
        rows = [["#", "polygon"]] + [[str(i + 1), str(x)] for i, x in enumerate(result)]
        return head + "\n" + _table(rows)
    if isinstance(result, dict) and "records" in result:
        rows = [["nu_b'", "status", "witness (m, s)"]]
        for r in result["records"]:
            w = r["witness"]
            rows.append([r["nu_b_prime"], str(r["wa_status"]), "" if w is None else f"({w['m']}, {w['s']})"])
        summary = _table([[k, str(v)] for k, v in result["summary"].items()])
        return "\n".join([head, f"delta = {result['delta']}", _table(rows), "", summary])
    if isinstance(result, dict):
        rows = []
        for key, value in result.items():
            if isinstance(value, list):
                value = ", ".join(map(str, value))
            rows.append([key, json.dumps(value) if isinstance(value, dict) else str(value)])
        return head + "\n" + _table(rows)
    return head + "\n" + str(result)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        result = args.func(args)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"error: precondition failed: {exc}", file=err)
        return EXIT_DOMAIN
    report = {"command": args.command, "inputs": _inputs(args), "result": result, "version": __version__}
    if args.pretty:
        print(render_pretty(report), file=out)
    else:
        print(json.dumps(report, indent=2), file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
