"""Traversal kit: one generic ``map_traverse`` from which rename and subst fall out.

An ``Assignment`` sends every variable of ``src`` to a value of its family over
``dst``. Entries are stored by de Bruijn index, so ``entries[0]`` is the image
of the newest slot of ``src``.

Families:

* ``VAR``: values are ints (variables); weakening is successor.
* ``TERM`` / ``COLORED``: values are terms; weakening renames by successor.

``rename`` is ``map_traverse`` with ``var_of`` as the embedding; ``subst`` is
``map_traverse`` with the identity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Sequence

from .syntax import (
    App,
    ArgMismatch,
    CLam,
    ColoredTerm,
    Context,
    Lam,
    OutOfScope,
    Term,
    Type,
    Var,
    erase,
    extend,
    is_colored,
    is_plain,
    lookup,
    synthesize,
)


class Family(enum.Enum):
    VAR = "var"
    TERM = "term"
    COLORED = "colored"


class Embed(enum.Enum):
    """The closed set of value morphisms ``map_traverse`` accepts."""

    IDENTITY = "id"
    VAR_OF = "var"
    ERASE = "erase"

    def source_ok(self, src: Family, dst: Family) -> bool:
        match self:
            case Embed.IDENTITY:
                return src is dst
            case Embed.VAR_OF:
                return src is Family.VAR
            case Embed.ERASE:
                return src is Family.COLORED and dst is Family.TERM
        return False

    def apply(self, value: Any, target: Family) -> Any:
        match self:
            case Embed.IDENTITY:
                return value
            case Embed.VAR_OF:
                return var_of(target, value)
            case Embed.ERASE:
                return erase(value)
        raise ValueError(self)


def var_of(family: Family, k: int) -> Any:
    return k if family is Family.VAR else Var(k)


def value_type(family: Family, ctx: Context, value: Any) -> Type:
    if family is Family.VAR:
        return lookup(ctx, value)
    if family is Family.TERM and not is_plain(value):
        raise TypeError(f"expected a plain term, got {value!r}")
    if family is Family.COLORED and not is_colored(value):
        raise TypeError(f"expected a colored term, got {value!r}")
    return synthesize(ctx, value)


@dataclass(frozen=True)
class Assignment:
    src: Context
    dst: Context
    family: Family
    entries: tuple
    # lifted copies, keyed by binder type; never part of equality
    _lifts: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.entries) != len(self.src):
            raise ValueError(
                f"assignment needs {len(self.src)} entries, got {len(self.entries)}"
            )

    def __call__(self, k: int) -> Any:
        if not 0 <= k < len(self.entries):
            raise OutOfScope(k, len(self.entries))
        return self.entries[k]

    def validate(self) -> "Assignment":
        """Check every entry has the type of its source slot; returns ``self``."""
        for k, value in enumerate(self.entries):
            got = value_type(self.family, self.dst, value)
            want = lookup(self.src, k)
            if got != want:
                raise ArgMismatch(want, got)
        return self


def identity(ctx: Context, family: Family = Family.VAR) -> Assignment:
    return Assignment(ctx, ctx, family, tuple(var_of(family, k) for k in range(len(ctx))))


@lru_cache(maxsize=None)
def successor(ctx: Context, ty: Type) -> Assignment:
    """The renaming ``ctx → ctx ◂ ty`` that skips the new slot."""
    return Assignment(ctx, extend(ctx, ty), Family.VAR, tuple(range(1, len(ctx) + 1)))


def renaming(src: Context, dst: Context, targets: Sequence[int]) -> Assignment:
    return Assignment(src, dst, Family.VAR, tuple(targets)).validate()


def substitution(src: Context, dst: Context, terms: Sequence[Any], colored: bool = False) -> Assignment:
    family = Family.COLORED if colored else Family.TERM
    return Assignment(src, dst, family, tuple(terms)).validate()


def weaken_value(family: Family, value: Any, dst: Context, ty: Type) -> Any:
    """Transport one environment entry from ``dst`` into ``dst ◂ ty``."""
    if family is Family.VAR:
        return value + 1
    return _traverse(family, Embed.VAR_OF, successor(dst, ty), value)


def lift_assignment(a: Assignment, ty: Type) -> Assignment:
    """Push ``a`` under a binder of type ``ty``: ``(a ≪ ty)``.

    The new slot goes to variable 0 and every old entry is weakened.
    """
    cached = a._lifts.get(ty)
    if cached is not None:
        return cached
    dst = extend(a.dst, ty)
    entries = (var_of(a.family, 0),) + tuple(
        weaken_value(a.family, value, a.dst, ty) for value in a.entries
    )
    lifted = Assignment(extend(a.src, ty), dst, a.family, entries)
    a._lifts[ty] = lifted
    return lifted


def map_traverse(family: Family, embed: Embed, a: Assignment, t: Any) -> Any:
    """Replace every free variable ``v`` of ``t`` by ``embed(a(v))``.

    ``family`` is the family of ``t`` and of the result; ``a.family`` is the
    family of the environment entries.
    """
    if not embed.source_ok(a.family, family):
        raise ValueError(f"{embed} cannot send {a.family} values to {family}")
    if family is Family.VAR:
        return embed.apply(a(t), family)
    return _traverse(family, embed, a, t)


def _traverse(family: Family, embed: Embed, a: Assignment, t: Any) -> Any:
    match t:
        case Var(k):
            return embed.apply(a(k), family)
        case App(fn, arg):
            return App(_traverse(family, embed, a, fn), _traverse(family, embed, a, arg))
        case Lam(dom, body) if family is Family.TERM:
            return Lam(dom, _traverse(family, embed, lift_assignment(a, dom), body))
        case CLam(color, dom, body) if family is Family.COLORED:
            return CLam(color, dom, _traverse(family, embed, lift_assignment(a, dom), body))
    raise TypeError(f"{t!r} is not a {family.value} value")


def _family_of(t: Any) -> Family:
    if isinstance(t, int):
        return Family.VAR
    return Family.TERM if is_plain(t) else Family.COLORED


def rename(rho: Assignment, t: Any) -> Any:
    """Rename the free variables of a variable, term or colored term."""
    if rho.family is not Family.VAR:
        raise TypeError("rename needs a variable assignment")
    return map_traverse(_family_of(t), Embed.VAR_OF, rho, t)


def subst(sigma: Assignment, t: Term | ColoredTerm) -> Term | ColoredTerm:
    """Capture-avoiding simultaneous substitution; ``sigma`` and ``t`` share a family."""
    if sigma.family is Family.VAR:
        raise TypeError("subst needs a term assignment; use rename for variables")
    return map_traverse(sigma.family, Embed.IDENTITY, sigma, t)


def single_subst(ctx: Context, ty: Type, s: Term | ColoredTerm, colored: bool = False) -> Assignment:
    """``𝕫/ s``: send the newest slot of ``ctx ◂ ty`` to ``s`` and shift the rest down."""
    got = synthesize(ctx, s)
    if got != ty:
        raise ArgMismatch(ty, got)
    family = Family.COLORED if colored else Family.TERM
    return Assignment(extend(ctx, ty), ctx, family, (s,) + tuple(Var(k) for k in range(len(ctx))))


def compose(second: Assignment, first: Assignment) -> Assignment:
    """Entrywise ``second ∘ first``; every entry of ``first`` is pushed through ``second``.

    The result's family is the richer of the two (a renaming followed by a
    substitution is a substitution).
    """
    if first.dst != second.src:
        raise ValueError("assignments are not composable")
    if first.family is Family.VAR:
        entries = tuple(second(k) for k in first.entries)
        return Assignment(first.src, second.dst, second.family, entries)
    if second.family is Family.VAR:
        entries = tuple(rename(second, t) for t in first.entries)
    else:
        entries = tuple(subst(second, t) for t in first.entries)
    return Assignment(first.src, second.dst, first.family, entries)


def erase_assignment(a: Assignment) -> Assignment:
    """``erase ∘ a`` for a colored substitution."""
    if a.family is not Family.COLORED:
        raise TypeError("erase_assignment needs a colored assignment")
    return Assignment(a.src, a.dst, Family.TERM, tuple(erase(t) for t in a.entries))
