"""Command-line entry point: ``check``, ``subst``, ``normalize`` and ``fuzz``.

Exit codes: 0 success, 1 parse/usage error, 2 scope/type error, 3 law
failure, 4 fuel exhausted.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from dataclasses import dataclass, field

from . import kit, laws
from .enumerate import DEFAULT_BUDGET, EnumBudget
from .mutants import MUTANTS, mutant
from .reduce import FuelExhausted, normalize
from .surface import NamedContext, ParseError, elaborate, parse_context, parse_term, pretty
from .syntax import LambdaError, ScopeTypeError, show_type

EXIT_OK, EXIT_USAGE, EXIT_TYPE, EXIT_LAW, EXIT_FUEL = 0, 1, 2, 3, 4
SUITE_CHOICES = ("all", "kit", "hom", "lemma")


class UsageError(LambdaError):
    pass


@dataclass
class CliConfig:
    command: str
    ctx: NamedContext = field(default_factory=NamedContext)
    fuel: int = 10_000
    budget: EnumBudget = DEFAULT_BUDGET
    suite: str = "all"
    machine: bool = False

    def __post_init__(self):
        if self.fuel < 1:
            raise UsageError("--fuel must be at least 1")
        if self.suite not in SUITE_CHOICES:
            raise UsageError(f"unknown suite {self.suite!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nat(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="one JSON record per line")

    scoped = argparse.ArgumentParser(add_help=False)
    scoped.add_argument("--ctx", default="", help='ambient context, e.g. "a:i, f:i->i" (leftmost oldest)')

    parser = _Parser(prog="scopekit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common, scoped], help="print the type of a term")
    p.add_argument("expr", help="term, or - for stdin")

    p = sub.add_parser("subst", parents=[common, scoped], help="substitute for the newest context slot")
    p.add_argument("target", help="term over the whole context, or - for stdin")
    p.add_argument("arg", help="term over the context minus its newest slot")

    p = sub.add_parser("normalize", parents=[common, scoped], help="normal-order beta normal form")
    p.add_argument("expr", help="term, or - for stdin")
    p.add_argument("--fuel", type=int, default=10_000)

    p = sub.add_parser("fuzz", parents=[common], help="run the exhaustive law suites")
    p.add_argument("--suite", choices=SUITE_CHOICES, default="all")
    p.add_argument("--max-type-depth", type=_nat, default=DEFAULT_BUDGET.max_type_depth)
    p.add_argument("--max-ctx-len", type=_nat, default=DEFAULT_BUDGET.max_ctx_len)
    p.add_argument("--max-term-size", type=_nat, default=DEFAULT_BUDGET.max_term_size)
    p.add_argument("--max-colors", type=_nat, default=DEFAULT_BUDGET.max_colors)
    p.add_argument("--max-entry-size", type=_nat, default=DEFAULT_BUDGET.max_entry_size)
    p.add_argument("--fail-fast", action="store_true", help="stop at the first counterexample")
    p.add_argument("--mutant", choices=MUTANTS, help=argparse.SUPPRESS)
    return parser


def _read(expr: str, stdin) -> str:
    return stdin.read() if expr == "-" else expr


class _Out:
    def __init__(self, machine: bool, stdout, stderr):
        self.machine = machine
        self.stdout = stdout
        self.stderr = stderr

    def result(self, text: str, **record) -> None:
        if self.machine:
            print(json.dumps({"ok": True, **record}, ensure_ascii=False), file=self.stdout)
        else:
            print(text, file=self.stdout)

    def error(self, exc: Exception, code: int) -> int:
        kind = type(exc).__name__
        pos = getattr(exc, "position", None)
        if self.machine:
            record = {"ok": False, "error": kind, "message": str(exc), "position": pos, "exit": code}
            print(json.dumps(record, ensure_ascii=False), file=self.stdout)
        else:
            where = f" at {pos}" if pos is not None and not isinstance(exc, ParseError) else ""
            print(f"error: {kind}{where}: {exc}", file=self.stderr)
        return code


def cmd_check(expr: str, ctx: NamedContext, out: _Out) -> int:
    j = elaborate(ctx, parse_term(expr))
    out.result(show_type(j.ty), command="check", type=show_type(j.ty), term=pretty(j.ctx, j.term))
    return EXIT_OK


def cmd_subst(target: str, ctx: NamedContext, arg: str, out: _Out) -> int:
    if len(ctx) == 0:
        raise UsageError("subst needs a non-empty --ctx; its newest entry is the substituted slot")
    rest = NamedContext(ctx.entries[:-1])
    slot_name, slot_ty = ctx.entries[-1]
    body = elaborate(ctx, parse_term(target))
    s = elaborate(rest, parse_term(arg))
    sigma = kit.single_subst(rest.types, slot_ty, s.term)
    result = kit.subst(sigma, body.term)
    text = pretty(rest.types, result)
    out.result(text, command="subst", slot=slot_name, term=text, type=show_type(body.ty))
    return EXIT_OK


def cmd_normalize(expr: str, ctx: NamedContext, fuel: int, out: _Out) -> int:
    j = elaborate(ctx, parse_term(expr))
    nf = normalize(j.ctx, j.term, fuel)
    text = pretty(j.ctx, nf)
    out.result(text, command="normalize", term=text, type=show_type(j.ty))
    return EXIT_OK


def cmd_fuzz(
    budget: EnumBudget, suite: str, out: _Out, mutant_name: str | None = None, fail_fast: bool = False
) -> int:
    guard = mutant(mutant_name) if mutant_name else contextlib.nullcontext()
    with guard:
        reports = laws.run_suites(budget, suite, fail_fast=fail_fast)
    render = laws.render_machine if out.machine else laws.render_text
    print(render(reports), file=out.stdout)
    failed = [r.law for r in reports if not r.ok]
    if not out.machine:
        total = sum(r.cases for r in reports)
        verdict = "all laws hold" if not failed else f"{len(failed)} law(s) failed: {', '.join(failed)}"
        print(f"{len(reports)} laws, {total} cases: {verdict}", file=out.stdout)
    return EXIT_LAW if failed else EXIT_OK


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(args.machine, stdout, stderr)
    try:
        if args.command == "fuzz":
            budget = EnumBudget(
                args.max_type_depth, args.max_ctx_len, args.max_term_size, args.max_colors, args.max_entry_size
            )
            cfg = CliConfig("fuzz", budget=budget, suite=args.suite, machine=args.machine)
            return cmd_fuzz(cfg.budget, cfg.suite, out, args.mutant, args.fail_fast)
        cfg = CliConfig(
            args.command,
            ctx=parse_context(args.ctx),
            fuel=getattr(args, "fuel", 10_000),
            machine=args.machine,
        )
        if cfg.command == "check":
            return cmd_check(_read(args.expr, stdin), cfg.ctx, out)
        if cfg.command == "subst":
            return cmd_subst(_read(args.target, stdin), cfg.ctx, args.arg, out)
        return cmd_normalize(_read(args.expr, stdin), cfg.ctx, cfg.fuel, out)
    except (ParseError, UsageError) as exc:
        return out.error(exc, EXIT_USAGE)
    except ScopeTypeError as exc:
        return out.error(exc, EXIT_TYPE)
    except FuelExhausted as exc:
        return out.error(exc, EXIT_FUEL)


if __name__ == "__main__":
    sys.exit(main())
