"""Command-line front end.

Exit status: 0 success, 1 mathematical failure (failed check, singular
moments, non-divisible closed form), 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import checker, closedforms, sequences
from .algebra import POLY, render
from .errors import AlgebraError, SingularMoment, UnknownId
from .expr import ParseError, parse_weight
from .jfraction import REGISTRY, expand, extract, interleave_zeros, moments_of, named_cf, shift
from .motzkin import CFSpec

EXIT_OK, EXIT_MATH, EXIT_USAGE = 0, 1, 2
DEFAULT_N = 32


class UsageError(Exception):
    pass


def _add_common(p: argparse.ArgumentParser, order: bool = True):
    if order:
        p.add_argument("-N", "--n", dest="n", type=int, default=None,
                       help=f"truncation order / max index (default {DEFAULT_N})")
    p.add_argument("--format", choices=("human", "json", "csv"), default="human")
    p.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="narayana-cf",
        description="Exact Jacobi continued fractions for Catalan, Narayana and q = -1 Narayana sequences.",
        epilog="exit status: 0 ok, 1 mathematical failure, 2 usage error",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("--suite", default="all", help="'all' or comma-separated check ids")
    p.add_argument("--list", action="store_true", help="list check ids and exit")
    _add_common(p)

    p = sub.add_parser("table", help="print a sequence")
    p.add_argument("seq", help="sequence id: " + ", ".join(sequences.SEQUENCES))
    p.add_argument("n_max", type=int)
    _add_common(p, order=False)

    p = sub.add_parser("expand", help="moments of a continued fraction")
    p.add_argument("--named", help="registry id: " + ", ".join(REGISTRY))
    p.add_argument("--s", help="horizontal weight s_n as an expression in n and t")
    p.add_argument("--t", help="down-step weight t_n as an expression in n and t")
    _add_common(p)

    p = sub.add_parser("extract", help="continued fraction coefficients from moments")
    p.add_argument("--seq", help="moment sequence id")
    p.add_argument("--named", help="use the moments claimed by a registry entry")
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--interleave-zeros", action="store_true")
    p.add_argument("--depth", type=int, required=True)
    _add_common(p, order=False)

    p = sub.add_parser("series", help="coefficients of a closed-form generating function")
    p.add_argument("gf", help="generating function id: " + ", ".join(closedforms.GF_BUILDERS))
    _add_common(p)
    return parser


# ------------------------------------------------------------------ commands


def cmd_verify(args):
    if args.list:
        rows = [{"id": c.id, "location": c.location, "default_n": c.default_n} for c in
                (checker.CHECKS[i] for i in checker.check_ids())]
        return EXIT_OK, rows, ("id", "location", "default_n")
    ids = None if args.suite == "all" else [s.strip() for s in args.suite.split(",") if s.strip()]
    if ids is not None:
        unknown = [i for i in ids if i not in checker.CHECKS]
        if unknown:
            raise UsageError(f"unknown check id: {', '.join(unknown)}")
    if args.n is not None and args.n < 0:
        raise UsageError("--n must be >= 0")
    results = checker.run_all(args.n, ids)
    status = EXIT_MATH if any(r.status == checker.FAIL for r in results) else EXIT_OK
    return status, [r.as_dict() for r in results], ("id", "status", "n", "witness", "note")


def cmd_table(args):
    try:
        f = sequences.sequence(args.seq)
    except UnknownId as exc:
        raise UsageError(str(exc)) from None
    if args.n_max < 0:
        raise UsageError("n_max must be >= 0")
    return EXIT_OK, [{"n": n, "value": render(f(n))} for n in range(args.n_max + 1)], ("n", "value")


def _order(args) -> int:
    n = DEFAULT_N if args.n is None else args.n
    if n < 0:
        raise UsageError("-N must be >= 0")
    return n


def cmd_expand(args):
    N = _order(args)
    if args.named:
        if args.s or args.t:
            raise UsageError("--named excludes --s/--t")
        try:
            spec = named_cf(args.named).cf
        except UnknownId as exc:
            raise UsageError(str(exc)) from None
    else:
        if not (args.s and args.t):
            raise UsageError("give --named or both --s and --t")
        try:
            spec = CFSpec(parse_weight(args.s), parse_weight(args.t), POLY)
            spec.s_at(0), spec.t_at(0)
        except (ParseError, ValueError) as exc:
            raise UsageError(f"cannot parse weight: {exc}") from None
    moments = expand(spec, N)
    return EXIT_OK, [{"n": n, "value": render(m)} for n, m in enumerate(moments)], ("n", "value")


def cmd_extract(args):
    if args.depth < 0:
        raise UsageError("--depth must be >= 0")
    if bool(args.seq) == bool(args.named):
        raise UsageError("give exactly one of --seq or --named")
    try:
        gen = sequences.sequence(args.seq) if args.seq else named_cf(args.named).moments
    except UnknownId as exc:
        raise UsageError(str(exc)) from None
    if args.shift:
        gen = shift(gen, args.shift)
    if args.interleave_zeros:
        gen = interleave_zeros(gen)
    moments = moments_of(gen, 2 * args.depth)
    if moments[0] != 1:
        raise UsageError(f"moment sequences must start with 1, got {render(moments[0])}")
    try:
        result = extract(moments, args.depth)
        s, t, failure = result.s, result.t, None
    except SingularMoment as exc:
        s, t, failure = exc.s, exc.t, exc
    rows = [{"n": k, "s": render(s[k]), "t": render(t[k]) if k < len(t) else None} for k in range(len(s))]
    if failure is not None:
        print(f"error: SingularMoment at depth {failure.index}: {failure}", file=sys.stderr)
        return EXIT_MATH, rows, ("n", "s", "t")
    return EXIT_OK, rows, ("n", "s", "t")


def cmd_series(args):
    N = _order(args)
    try:
        series = closedforms.build(args.gf, N)
    except UnknownId as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK, [{"n": n, "value": render(c)} for n, c in enumerate(series)], ("n", "value")


COMMANDS = {
    "verify": cmd_verify,
    "table": cmd_table,
    "expand": cmd_expand,
    "extract": cmd_extract,
    "series": cmd_series,
}


# ------------------------------------------------------------------- output


def _human(command: str, rows: list[dict]) -> str:
    lines = []
    if command == "verify" and rows and "status" in rows[0]:
        for r in rows:
            line = f"{r['status'].upper():7} {r['id']} (n={r['n']})"
            if r["witness"]:
                line += f"  {r['witness']}"
            elif r["note"]:
                line += f"  {r['note']}"
            lines.append(line)
        counts = {s: sum(r["status"] == s for r in rows) for s in (checker.PASS, checker.FLAGGED, checker.FAIL)}
        lines.append(f"{counts['pass']} passed, {counts['flagged']} flagged, {counts['fail']} failed")
    elif command == "verify":
        lines.extend(f"{r['id']:16} n={r['default_n']:<3} {r['location']}" for r in rows)
    elif command == "extract":
        lines.extend(f"s_{r['n']} = {r['s']}" for r in rows)
        lines.extend(f"t_{r['n']} = {r['t']}" for r in rows if r["t"] is not None)
    else:
        lines.extend(f"{r['n']}: {r['value']}" for r in rows)
    return "\n".join(lines) + "\n"


def _csv(rows: list[dict], columns) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: "" if r.get(k) is None else r.get(k) for k in columns})
    return buf.getvalue()


def _params(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("command", "format", "out")}


def render_output(args, rows, columns) -> str:
    if args.format == "json":
        doc = {"command": args.command, "params": _params(args), "results": rows}
        return json.dumps(doc, indent=2) + "\n"
    if args.format == "csv":
        return _csv(rows, columns)
    return _human(args.command, rows)


def _glue_weight_args(argv: list[str]) -> list[str]:
    """Turn ``--t -t`` into ``--t=-t``; argparse would read ``-t`` as an option."""
    out = []
    it = iter(argv)
    for arg in it:
        if arg in ("--s", "--t"):
            nxt = next(it, None)
            out.append(arg if nxt is None else f"{arg}={nxt}")
        else:
            out.append(arg)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_weight_args(sys.argv[1:] if argv is None else list(argv)))
    try:
        status, rows, columns = COMMANDS[args.command](args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AlgebraError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH
    text = render_output(args, rows, columns)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
