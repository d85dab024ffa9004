"""Command-line entry point: ``mnesor {check,eval,stab,annih,witness,hasse}``."""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import dsl, structure
from .checker import CheckBounds, check_all
from .lattice import NotALattice, parse_specifier
from .lattice_model import MissingBottom, make_self_action
from .seq_model import SeqSpace, Universe, geo_path, load_fixture

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# sublattices larger than this are summarized instead of listed
LIST_LIMIT = 64
# the pairwise closure scan is quadratic in the member count
CLOSURE_LIMIT = 4096
# exhaustive checks over more mnesors than this are refused
CARRIER_LIMIT = 2000


class UsageError(Exception):
    pass


def build_space(args):
    if args.model == "self":
        if not args.lattice:
            raise UsageError("--model self needs --lattice")
        try:
            return make_self_action(parse_specifier(args.lattice))
        except (ValueError, OSError, MissingBottom, NotALattice) as exc:
            raise UsageError(f"bad lattice {args.lattice!r}: {exc}") from None
    if args.universe:
        return SeqSpace(Universe(tuple(a.strip() for a in args.universe.split(",") if a.strip())))
    path = args.fixture or geo_path()
    try:
        space = load_fixture(path)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read fixture {path}: {exc}") from None
    if args.universe_limit is not None:
        if not 0 < args.universe_limit <= len(space.universe):
            raise UsageError("--universe-limit out of range")
        space = space.restrict(args.universe_limit)
    return space


def _model_options(p: argparse.ArgumentParser):
    p.add_argument("--model", choices=["seq", "self"], default="seq")
    p.add_argument("--fixture", help="column-tuple fixture JSON (default: shipped geo.json)")
    p.add_argument("--universe", help="comma-separated atoms; overrides --fixture")
    p.add_argument("--universe-limit", type=int, help="keep only the first N fixture atoms")
    p.add_argument("--lattice", help="chain:N, powerset:N, two_point, m3, n5, file:PATH")
    p.add_argument("--json", action="store_true", help="JSON on standard output")


def _table(report) -> str:
    width = max(len(r.law) for r in report.results)
    b = report.bounds
    cap = b["max_mnesor_enumeration"]
    scope = "total" if b["total"] else "partial"
    lines = [
        f"model {report.model}  lattice {report.lattice}  "
        f"max size {'none' if cap is None else cap} ({scope} enumeration)"
    ]
    for r in report.results:
        line = f"{r.law:<{width}}  {r.status:<7}  {r.instances:>7}"
        if r.rendered:
            line += "  " + ", ".join(f"{k}={v}" for k, v in r.rendered.items())
        elif r.reason:
            line += f"  ({r.reason})"
        lines.append(line)
    return "\n".join(lines)


def cmd_check(args) -> int:
    space = build_space(args)
    try:
        bounds = CheckBounds(args.bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if isinstance(space, SeqSpace):
        n = len(space.universe)
        k = n if args.bound is None else min(args.bound, n)
        count = sum(math.perm(n, i) for i in range(k + 1))
        if count > CARRIER_LIMIT:
            raise UsageError(
                f"{count} column tuples to enumerate; use --universe-limit or --bound"
            )
    report = check_all(space, bounds, jobs=args.jobs)
    text = report.dumps()
    if args.out:
        Path(args.out).write_text(text)
    print(text if args.json else _table(report), end="\n" if not args.json else "")
    return EXIT_FAIL if report.failed else EXIT_OK


def cmd_eval(args) -> int:
    env = dsl.Environment.for_space(build_space(args))
    try:
        if args.expr:
            for src in args.expr:
                print(dsl.run(src, env))
        elif args.repl:
            dsl.repl(env)
        else:
            text = Path(args.script).read_text() if args.script else sys.stdin.read()
            for line in dsl.run_script(text, env):
                print(line)
    except dsl.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except dsl.EvalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _operand(env, src: str):
    try:
        v = dsl.evaluate(dsl.parse_expr(src), env)
    except (dsl.ParseError, dsl.EvalError) as exc:
        raise UsageError(f"{src!r}: {exc}") from None
    return v


def _granular_names(space, members) -> list[str]:
    out = []
    for g in members:
        names = [n for n, v in sorted(getattr(space, "named", {}).items()) if v == g.id]
        out.append(g.label + (f"  ({', '.join(names)})" if names else ""))
    return out


def _print_members(space, granulars, as_json, title):
    if as_json:
        named = getattr(space, "named", {})
        doc = {"count": len(granulars)}
        if len(granulars) <= LIST_LIMIT:
            doc["members"] = [g.label for g in granulars]
        doc["named"] = sorted(n for n, v in named.items() if v in {g.id for g in granulars})
        print(json.dumps(doc, indent=2))
        return
    print(f"{title}: {len(granulars)} granulars")
    if len(granulars) <= LIST_LIMIT:
        for line in _granular_names(space, granulars):
            print(f"  {line}")
    else:
        named = getattr(space, "named", {})
        ids = {g.id for g in granulars}
        hits = sorted(n for n, v in named.items() if v in ids)
        print(f"  named members: {' '.join(hits) if hits else '(none)'}")


def _cmd_sublattice(args, which) -> int:
    space = build_space(args)
    env = dsl.Environment.for_space(space)
    x = _operand(env, args.expr)
    sub = structure.stabilizers(space, x) if which == "stab" else structure.annihilators(space, x)
    title = "stabilizers" if which == "stab" else "annihilators"
    _print_members(space, sub.granulars(), args.json, f"{title} of {space.render(x)}")
    if len(sub) > CLOSURE_LIMIT:
        if not args.json:
            print(f"closure scan skipped: {len(sub)} members exceed {CLOSURE_LIMIT}")
        return EXIT_OK
    closed = sub.is_closed()
    if not args.json:
        print(f"closed under join and meet: {'yes' if closed else 'NO'}")
    return EXIT_OK if closed else EXIT_FAIL


def cmd_witness(args) -> int:
    space = build_space(args)
    env = dsl.Environment.for_space(space)
    x, y = _operand(env, args.x), _operand(env, args.y)
    ws = structure.absorption_witnesses(space, x, y)
    if args.json:
        _print_members(space, ws, True, "")
    elif len(ws) <= LIST_LIMIT:
        for line in _granular_names(space, ws):
            print(line)
    else:
        _print_members(space, ws, False, "absorption witnesses")
    return EXIT_OK if ws else EXIT_FAIL


def cmd_hasse(args) -> int:
    space = build_space(args)
    try:
        edges = structure.hasse(space, args.bound)
    except structure.NotAnOrder as exc:
        print(f"prefix relation is not a partial order: {exc}", file=sys.stderr)
        return EXIT_FAIL
    dot = structure.to_dot(space, edges, args.bound)
    if args.out:
        Path(args.out).write_text(dot)
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mnesor", description="mnesor-space workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check every catalog law exhaustively")
    _model_options(p)
    p.add_argument("--bound", type=int, help="max mnesor size to enumerate (default: all)")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", help="evaluate DSL expressions")
    _model_options(p)
    p.add_argument("-e", "--expr", action="append", help="expression (repeatable)")
    p.add_argument("--repl", action="store_true")
    p.add_argument("script", nargs="?", help="script file (default: standard input)")
    p.set_defaults(func=cmd_eval)

    for name, helptext in (("stab", "stabilizer sublattice"), ("annih", "annihilator sublattice")):
        p = sub.add_parser(name, help=helptext)
        _model_options(p)
        p.add_argument("-e", "--expr", required=True, help="mnesor expression")
        p.set_defaults(func=lambda a, which=name: _cmd_sublattice(a, which))

    p = sub.add_parser("witness", help="absorption witnesses alpha with (x + y) * alpha = x")
    _model_options(p)
    p.add_argument("-x", required=True)
    p.add_argument("-y", required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("hasse", help="prefix-order covering relation as DOT")
    _model_options(p)
    p.add_argument("--bound", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_hasse)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"mnesor {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
