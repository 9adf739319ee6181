"""Command-line interface: ``adf solve|check|reduct|table|meta|gen``."""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .config import DEFAULT_LIMITS, Limits
from .core import bits, truth_table
from .errors import AdfError, ParseError
from .metatheory import PROPERTIES, GenConfig, gen_random_adf, run_suite
from .oracle import semantics_bruteforce
from .parsing import format_adf, parse_adf, parse_interp
from .semantics import Semantics, enumerate_semantics, holds, reduct

SEM_CHOICES = [s.value for s in Semantics]


class _Fail(Exception):
    """Usage or input problem; reported on stderr with exit code 2."""


def _read_adf(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise _Fail(f"{path}: {e.strerror}") from None
    try:
        return parse_adf(text)
    except ParseError as e:
        raise _Fail("\n".join(f"{path}:{d}" for d in e.diagnostics)) from None


def _interp(text: str, adf):
    try:
        return parse_interp(text, adf.vocab)
    except ParseError as e:
        raise _Fail("\n".join(f"--interp: {d}" for d in e.diagnostics)) from None


def _limits(args) -> Limits:
    d = DEFAULT_LIMITS
    return Limits(
        max_undefined=args.max_undef if args.max_undef is not None else d.max_undefined,
        max_enum_three=args.max_enum if args.max_enum is not None else d.max_enum_three,
        max_enum_two=args.max_enum_two if args.max_enum_two is not None else d.max_enum_two,
        max_oracle_undefined=d.max_oracle_undefined,
        max_parents=d.max_parents,
    )


def cmd_solve(args, out) -> int:
    adf = _read_adf(args.file)
    limits = _limits(args)
    if args.oracle:
        found = semantics_bruteforce(adf, args.sem, limits=limits)
    else:
        found = enumerate_semantics(adf, args.sem, limits=limits)
    shown = found if args.limit is None else found[: args.limit]
    if args.count:
        print(len(found), file=out)
    else:
        for v in shown:
            print(v, file=out)
    return 0 if found else 1


def cmd_check(args, out) -> int:
    adf = _read_adf(args.file)
    v = _interp(args.interp, adf)
    yes = holds(adf, args.sem, v, limits=_limits(args))
    print("YES" if yes else "NO", file=out)
    return 0 if yes else 1


def cmd_reduct(args, out) -> int:
    adf = _read_adf(args.file)
    v = _interp(args.interp, adf)
    out.write(format_adf(reduct(adf, v)))
    return 0


def cmd_table(args, out) -> int:
    adf = _read_adf(args.file)
    names = adf.vocab.names
    if args.statement is not None:
        if args.statement not in adf.vocab:
            raise _Fail(f"unknown statement {args.statement}")
        targets = [adf.vocab.index[args.statement]]
    else:
        targets = range(adf.n)
    limits = _limits(args)
    for s in targets:
        table = truth_table(adf, s, max_parents=limits.max_parents)
        plist = table.parent_list
        print(f"% {names[s]}: parents {' '.join(names[p] for p in plist) or '(none)'}", file=out)
        for row in range(1 << len(plist)):
            chosen = frozenset(p for j, p in enumerate(plist) if row >> j & 1)
            lhs = " ".join(("t" if p in chosen else "f") + f"({names[p]})" for p in plist)
            val = "t" if table.rows[chosen] else "f"
            print(f"ac({names[s]}): {lhs} => {val}".replace(":  =>", ": =>"), file=out)
    return 0


def cmd_meta(args, out) -> int:
    cfg = GenConfig(n_statements=args.n, max_formula_depth=args.depth, link_density=args.density,
                    seed=args.seed, trials=args.trials, samples=args.samples)
    names = args.property
    if names:
        unknown = [n for n in names if n not in PROPERTIES]
        if unknown:
            raise _Fail(f"unknown property {', '.join(unknown)}; known: {', '.join(PROPERTIES)}")
    start = time.perf_counter()
    reports = run_suite(cfg, names, limits=_limits(args), use_fixtures=not args.no_fixtures,
                        out_dir=Path(args.out) if args.out else None)
    for r in reports:
        print(r.describe(), file=out)
    for r in reports:
        print(r.record(), file=out)
    bad = [r.name for r in reports if not r.ok]
    summary = f"{len(reports) - len(bad)}/{len(reports)} properties as expected"
    if args.timing:
        summary += f" in {time.perf_counter() - start:.1f}s"
    print(summary + (f"; unexpected: {', '.join(bad)}" if bad else ""), file=out)
    return 0 if not bad else 1


def cmd_gen(args, out) -> int:
    cfg = GenConfig(n_statements=args.n, max_formula_depth=args.depth,
                    link_density=args.density, seed=args.seed)
    out.write(format_adf(gen_random_adf(cfg, af=args.af)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-enum", type=int, default=argparse.SUPPRESS,
                      help=f"cap on |S| for 3^|S| scans (default {DEFAULT_LIMITS.max_enum_three})")
    caps.add_argument("--max-enum-two", type=int, default=argparse.SUPPRESS,
                      help=f"cap on |S| for 2^|S| scans (default {DEFAULT_LIMITS.max_enum_two})")
    caps.add_argument("--max-undef", type=int, default=argparse.SUPPRESS,
                      help=f"cap on undefined parents per statement in Γ (default {DEFAULT_LIMITS.max_undefined})")

    p = argparse.ArgumentParser(prog="adf", parents=[caps],
                                description="Abstract dialectical framework solver and checker.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[caps], help="enumerate interpretations of a semantics")
    s.add_argument("--sem", choices=SEM_CHOICES, required=True)
    s.add_argument("--count", action="store_true", help="print only the number of interpretations")
    s.add_argument("--limit", type=int, help="print at most N interpretations")
    s.add_argument("--oracle", action="store_true", help="use the brute-force oracle")
    s.add_argument("file")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("check", parents=[caps], help="decide membership of one interpretation")
    c.add_argument("--sem", choices=SEM_CHOICES, required=True)
    c.add_argument("--interp", required=True)
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("reduct", parents=[caps], help="print the reduct for a two-valued model")
    r.add_argument("--interp", required=True)
    r.add_argument("file")
    r.set_defaults(func=cmd_reduct)

    t = sub.add_parser("table", parents=[caps], help="print acceptance conditions as truth tables")
    t.add_argument("file")
    t.add_argument("--statement")
    t.set_defaults(func=cmd_table)

    m = sub.add_parser("meta", parents=[caps], help="run the meta-theory property suite")
    m.add_argument("--trials", type=int, default=1000)
    m.add_argument("--n", type=int, default=5, help="maximum statements per instance")
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--depth", type=int, default=3)
    m.add_argument("--density", type=float, default=0.4)
    m.add_argument("--samples", type=int, default=10)
    m.add_argument("--property", action="append", help="run only this property (repeatable)")
    m.add_argument("--out", help="write shrunk counterexamples to this directory")
    m.add_argument("--no-fixtures", action="store_true", help="search without seeded fixtures")
    m.add_argument("--timing", action="store_true", help="append wall time to the summary")
    m.set_defaults(func=cmd_meta)

    g = sub.add_parser("gen", parents=[caps], help="emit a random instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--af", action="store_true", help="AF-shaped conditions")
    g.add_argument("--depth", type=int, default=3)
    g.add_argument("--density", type=float, default=0.4)
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    for name in ("max_enum", "max_enum_two", "max_undef"):
        if not hasattr(args, name):
            setattr(args, name, None)
    try:
        return args.func(args, out)
    except (_Fail, AdfError, ValueError) as e:
        print(f"adf: {e}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
