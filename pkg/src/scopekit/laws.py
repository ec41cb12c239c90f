"""Exhaustive law checks over the enumerated domain.

Three suites:

* ``kit``: the kit agrees with the naive reference code, identity and
  functoriality laws, lift laws, type preservation and subject reduction.
* ``hom``: color erasure is a homomorphism of syntaxes.
* ``lemma``: the four rename/subst fusion laws and the single-variable
  substitution lemma.

Each law yields a ``LawReport``; a report with no failures means the law held
on every enumerated case.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import kit
from .enumerate import (
    EnumBudget,
    enumerate_colored_terms,
    enumerate_contexts,
    enumerate_renamings,
    enumerate_substs,
    enumerate_terms,
    enumerate_types,
    typed_terms,
)
from .kit import Assignment, Embed, Family
from .naive import naive_rename, naive_subst, shift
from .reduce import reduction_sequence
from .syntax import App, Arrow, Base, CLam, Lam, Var, erase, extend, show_term, show_type, synthesize

MAX_STORED_FAILURES = 20


class StopSweep(Exception):
    """Raised by a fail-fast report on its first failure."""


@dataclass
class Counterexample:
    law: str
    inputs: dict[str, str]
    expected: str
    got: str

    def to_json(self) -> str:
        return json.dumps(
            {"law": self.law, "inputs": self.inputs, "expected": self.expected, "got": self.got},
            ensure_ascii=False,
        )


@dataclass
class LawReport:
    law: str
    cases: int = 0
    failed: int = 0
    failures: list[Counterexample] = field(default_factory=list)
    fail_fast: bool = field(default=False, repr=False, compare=False)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def check(self, expected, got, **inputs) -> bool:
        """Count one case; record it when ``expected != got``."""
        self.cases += 1
        if expected == got:
            return True
        self.failed += 1
        if len(self.failures) < MAX_STORED_FAILURES:
            self.failures.append(
                Counterexample(self.law, {k: render(v) for k, v in inputs.items()}, render(expected), render(got))
            )
        if self.fail_fast:
            raise StopSweep(self.law)
        return False

    def merge(self, other: "LawReport") -> "LawReport":
        assert other.law == self.law
        room = MAX_STORED_FAILURES - len(self.failures)
        return LawReport(
            self.law,
            self.cases + other.cases,
            self.failed + other.failed,
            self.failures + other.failures[: max(room, 0)],
        )

    def summary_json(self) -> str:
        return json.dumps({"law": self.law, "ok": self.ok, "cases": self.cases, "failures": self.failed})


def render(value) -> str:
    if isinstance(value, Assignment):
        return show_assignment(value)
    if isinstance(value, tuple):
        return "[" + ", ".join(render(x) for x in value) + "]"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (Var, App, Lam, CLam)):
        return show_term(value)
    if isinstance(value, (Base, Arrow)):
        return show_type(value)
    return repr(value)


def show_assignment(a: Assignment) -> str:
    def one(v):
        return f"#{v}" if a.family is Family.VAR else show_term(v)

    body = ", ".join(f"{k}↦{one(v)}" for k, v in enumerate(a.entries))
    return f"{render(a.src)}→{render(a.dst)} {{{body}}}"


def _sweep(*names: str):
    """Give the decorated checker fresh reports named ``names``, in that order.

    The checker becomes ``check(b, fail_fast=False) -> list[LawReport]``; with
    ``fail_fast`` the sweep stops at the first counterexample of any law.
    """

    def wrap(body: Callable[[EnumBudget, dict[str, LawReport]], None]):
        @functools.wraps(body)
        def check(b: EnumBudget, fail_fast: bool = False) -> list[LawReport]:
            reports = {name: LawReport(name, fail_fast=fail_fast) for name in names}
            try:
                body(b, reports)
            except StopSweep:
                pass
            return list(reports.values())

        return check

    return wrap


# -- kit ---------------------------------------------------------------------


@_sweep("rename-oracle", "subst-oracle", "rename-preserves-type", "subst-preserves-type")
def check_oracle_laws(b: EnumBudget, r: dict[str, LawReport]) -> None:
    """Kit rename/subst against the naive reference, plus type preservation of each result."""
    ctxs = enumerate_contexts(b)
    terms = {ctx: typed_terms(ctx, b) for ctx in ctxs}
    for src in ctxs:
        for dst in ctxs:
            for rho in enumerate_renamings(src, dst):
                for ty, t in terms[src]:
                    got = kit.rename(rho, t)
                    r["rename-oracle"].check(naive_rename(rho, t), got, rho=rho, t=t)
                    r["rename-preserves-type"].check(ty, _type_or_error(dst, got), rho=rho, t=t)
            for sigma in enumerate_substs(src, dst, b):
                for ty, t in terms[src]:
                    got = kit.subst(sigma, t)
                    r["subst-oracle"].check(naive_subst(sigma, t), got, sigma=sigma, t=t)
                    r["subst-preserves-type"].check(ty, _type_or_error(dst, got), sigma=sigma, t=t)


@_sweep(
    "rename-identity",
    "subst-identity",
    "rename-functoriality",
    "map-var-composition",
    "lift-var",
    "lift-term",
    "beta-preserves-type",
)
def check_structure_laws(b: EnumBudget, r: dict[str, LawReport]) -> None:
    """Identity and functoriality, lift laws, and subject reduction of normal-order steps."""
    ctxs = enumerate_contexts(b)
    types = enumerate_types(b)
    terms = {ctx: typed_terms(ctx, b) for ctx in ctxs}
    renamings = {(s, d): enumerate_renamings(s, d) for s in ctxs for d in ctxs}

    for ctx in ctxs:
        ident_r = kit.identity(ctx)
        ident_s = kit.identity(ctx, Family.TERM)
        for ty, t in terms[ctx]:
            r["rename-identity"].check(t, kit.rename(ident_r, t), ctx=ctx, t=t)
            r["subst-identity"].check(t, kit.subst(ident_s, t), ctx=ctx, t=t)
            _check_beta(r["beta-preserves-type"], ctx, ty, t)

    for (src, dst), rhos in renamings.items():
        for rho in rhos:
            for v in range(len(src)):
                r["map-var-composition"].check(rho(v), kit.map_traverse(Family.VAR, Embed.IDENTITY, rho, v), rho=rho, v=v)
            for i in types:
                _check_lift(r["lift-var"], rho, i, lambda v: v + 1)

    for mid in ctxs:
        for src in ctxs:
            for rho1 in renamings[src, mid]:
                for dst in ctxs:
                    for rho2 in renamings[mid, dst]:
                        both = kit.compose(rho2, rho1)
                        for _, t in terms[src]:
                            r["rename-functoriality"].check(
                                kit.rename(both, t), kit.rename(rho2, kit.rename(rho1, t)), rho1=rho1, rho2=rho2, t=t
                            )

    for src in ctxs:
        for dst in ctxs:
            for sigma in enumerate_substs(src, dst, b.entries()):
                for i in types:
                    _check_lift(r["lift-term"], sigma, i, shift)


def check_kit_laws(b: EnumBudget, fail_fast: bool = False) -> list[LawReport]:
    reports = check_oracle_laws(b, fail_fast=fail_fast)
    if fail_fast and not all(rep.ok for rep in reports):
        return reports
    return reports + check_structure_laws(b, fail_fast=fail_fast)


def _type_or_error(ctx, t):
    try:
        return synthesize(ctx, t)
    except Exception as exc:  # an ill-typed result is a failure, not a crash
        return f"{type(exc).__name__}: {exc}"


def _check_lift(report: LawReport, a: Assignment, i, weaken: Callable) -> None:
    lifted = kit.lift_assignment(a, i)
    expected = (kit.var_of(a.family, 0),) + tuple(weaken(v) for v in a.entries)
    report.check(expected, lifted.entries, a=a, i=i)
    report.check((extend(a.src, i), extend(a.dst, i)), (lifted.src, lifted.dst), a=a, i=i)


def _check_beta(report: LawReport, ctx, ty, t) -> None:
    for reduct in reduction_sequence(ctx, t):
        report.check(ty, _type_or_error(ctx, reduct), ctx=ctx, t=t, reduct=reduct)


# -- hom ---------------------------------------------------------------------


@_sweep("Hvar", "Hrename", "Hsubst", "Hmap-erase", "Hsubst-single", "Hsingle", "Hlift", "erase-type")
def check_hom_laws(b: EnumBudget, r: dict[str, LawReport]) -> None:
    """Color erasure commutes with var, rename, subst, single subst and lifting."""
    ctxs = enumerate_contexts(b)
    types = enumerate_types(b)
    colored = {ctx: typed_terms(ctx, b, colored=True) for ctx in ctxs}

    for ctx in ctxs:
        for v in range(len(ctx)):
            r["Hvar"].check(Var(v), erase(Var(v)), ctx=ctx, v=v)
        for ty, t in colored[ctx]:
            r["erase-type"].check(synthesize(ctx, t), _type_or_error(ctx, erase(t)), ctx=ctx, t=t)

    for src in ctxs:
        for dst in ctxs:
            for rho in enumerate_renamings(src, dst):
                for _, t in colored[src]:
                    r["Hrename"].check(kit.rename(rho, erase(t)), erase(kit.rename(rho, t)), rho=rho, t=t)
            for sigma in enumerate_substs(src, dst, b.entries(), colored=True):
                plain_sigma = kit.erase_assignment(sigma)
                for _, t in colored[src]:
                    lhs = erase(kit.subst(sigma, t))
                    r["Hsubst"].check(kit.subst(plain_sigma, erase(t)), lhs, sigma=sigma, t=t)
                    r["Hmap-erase"].check(
                        kit.map_traverse(Family.TERM, Embed.ERASE, sigma, erase(t)), lhs, sigma=sigma, t=t
                    )
                for i in types:
                    lifted = kit.erase_assignment(kit.lift_assignment(sigma, i))
                    r["Hlift"].check(kit.lift_assignment(plain_sigma, i).entries, lifted.entries, sigma=sigma, i=i)

    for ctx in ctxs:
        if len(ctx) >= b.max_ctx_len:
            continue
        for i in types:
            inner = extend(ctx, i)
            for s in enumerate_colored_terms(ctx, i, b):
                z = kit.single_subst(ctx, i, s, colored=True)
                z_plain = kit.single_subst(ctx, i, erase(s))
                r["Hsingle"].check(z_plain.entries, kit.erase_assignment(z).entries, ctx=ctx, s=s)
                for _, t in colored[inner]:
                    r["Hsubst-single"].check(kit.subst(z_plain, erase(t)), erase(kit.subst(z, t)), s=s, t=t)


# -- lemma -------------------------------------------------------------------


@_sweep("RR", "RS", "SR", "SS", "subst-lemma")
def check_composition_laws(b: EnumBudget, r: dict[str, LawReport]) -> None:
    """Rename/subst fusion (RR, RS, SR, SS) and the single-substitution lemma."""
    ctxs = enumerate_contexts(b)
    eb = b.entries()
    terms = {ctx: typed_terms(ctx, b) for ctx in ctxs}
    renamings = {(s, d): enumerate_renamings(s, d) for s in ctxs for d in ctxs}
    substs = {(s, d): enumerate_substs(s, d, eb) for s in ctxs for d in ctxs}

    for src in ctxs:
        for mid in ctxs:
            for dst in ctxs:
                for rho1 in renamings[src, mid]:
                    for rho2 in renamings[mid, dst]:
                        both = kit.compose(rho2, rho1)
                        for _, t in terms[src]:
                            r["RR"].check(kit.rename(both, t), kit.rename(rho2, kit.rename(rho1, t)), rho1=rho1, rho2=rho2, t=t)
                for sigma in substs[src, mid]:
                    for rho in renamings[mid, dst]:
                        both = kit.compose(rho, sigma)
                        for _, t in terms[src]:
                            r["RS"].check(kit.subst(both, t), kit.rename(rho, kit.subst(sigma, t)), sigma=sigma, rho=rho, t=t)
                for rho in renamings[src, mid]:
                    for sigma in substs[mid, dst]:
                        both = kit.compose(sigma, rho)
                        for _, t in terms[src]:
                            r["SR"].check(kit.subst(both, t), kit.subst(sigma, kit.rename(rho, t)), rho=rho, sigma=sigma, t=t)
                for sigma1 in substs[src, mid]:
                    for sigma2 in substs[mid, dst]:
                        both = kit.compose(sigma2, sigma1)
                        for _, t in terms[src]:
                            r["SS"].check(
                                kit.subst(both, t), kit.subst(sigma2, kit.subst(sigma1, t)), sigma1=sigma1, sigma2=sigma2, t=t
                            )

    # t[s]₀[u]₀ = t[lift(𝕫/u)][s[u]₀]₀ for t over Γ◂a◂b, s over Γ◂a, u over Γ
    types = enumerate_types(b)
    for ctx in ctxs:
        if len(ctx) >= b.max_ctx_len:
            continue
        for a in types:
            for bty in types:
                inner = extend(extend(ctx, a), bty)
                body_terms = typed_terms(inner, b)
                for u in enumerate_terms(ctx, a, eb):
                    zu = kit.single_subst(ctx, a, u)
                    lifted = kit.lift_assignment(zu, bty)
                    for s in enumerate_terms(extend(ctx, a), bty, eb):
                        zs = kit.single_subst(extend(ctx, a), bty, s)
                        zsu = kit.single_subst(ctx, bty, kit.subst(zu, s))
                        for _, t in body_terms:
                            r["subst-lemma"].check(
                                kit.subst(zsu, kit.subst(lifted, t)), kit.subst(zu, kit.subst(zs, t)), u=u, s=s, t=t
                            )


SUITES: dict[str, Callable[..., list[LawReport]]] = {
    "kit": check_kit_laws,
    "hom": check_hom_laws,
    "lemma": check_composition_laws,
}


def run_suites(b: EnumBudget, suite: str = "all", fail_fast: bool = False) -> list[LawReport]:
    names = list(SUITES) if suite == "all" else [suite]
    out: list[LawReport] = []
    for name in names:
        out.extend(SUITES[name](b, fail_fast=fail_fast))
    return out


def render_text(reports: Iterable[LawReport]) -> str:
    lines = []
    for rep in reports:
        status = "PASS" if rep.ok else "FAIL"
        lines.append(f"{status}  {rep.law:<22} {rep.cases:>9} cases  {rep.failed} failures")
        for cx in rep.failures:
            inputs = "; ".join(f"{k}={v}" for k, v in cx.inputs.items())
            lines.append(f"      {inputs}")
            lines.append(f"        expected {cx.expected}")
            lines.append(f"        got      {cx.got}")
    return "\n".join(lines)


def render_machine(reports: Iterable[LawReport]) -> str:
    lines = []
    for rep in reports:
        lines.append(rep.summary_json())
        lines.extend(cx.to_json() for cx in rep.failures)
    return "\n".join(lines)
