"""Exhaustive, deterministic enumeration of types, contexts, terms and assignments.

Term enumeration is type-directed. Lambda annotations are forced by the
requested type, so the only free choice is the argument type of each
application; those are drawn from ``enumerate_types(budget)``. Everything is
emitted smallest-first, constructors ordered var < app < lam.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from functools import lru_cache

from .kit import Assignment, Family
from .syntax import (
    IOTA,
    App,
    Arrow,
    CLam,
    Color,
    Context,
    Lam,
    Type,
    Var,
    lookup,
)


@dataclass(frozen=True)
class EnumBudget:
    max_type_depth: int = 2
    max_ctx_len: int = 2
    max_term_size: int = 5
    max_colors: int = 2
    # size cap for assignment entries in laws that stack two assignments
    # or carry colored entries; full-size entries there explode combinatorially
    max_entry_size: int = 2

    def __post_init__(self):
        for name in ("max_type_depth", "max_ctx_len", "max_term_size", "max_colors", "max_entry_size"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")

    def entries(self) -> "EnumBudget":
        """The budget used for assignment entries in stacked/colored laws."""
        return replace(self, max_term_size=min(self.max_term_size, self.max_entry_size))


DEFAULT_BUDGET = EnumBudget()


@lru_cache(maxsize=None)
def _types_upto(depth: int) -> tuple[Type, ...]:
    if depth == 0:
        return (IOTA,)
    smaller = _types_upto(depth - 1)
    new = tuple(
        Arrow(dom, cod)
        for dom in smaller
        for cod in smaller
        if max(_depth(dom), _depth(cod)) == depth - 1
    )
    return smaller + new


def _depth(ty: Type) -> int:
    return 0 if not isinstance(ty, Arrow) else 1 + max(_depth(ty.dom), _depth(ty.cod))


def enumerate_types(b: EnumBudget) -> list[Type]:
    """All types of arrow depth ≤ ``max_type_depth``, by depth then structure."""
    return list(_types_upto(b.max_type_depth))


def enumerate_contexts(b: EnumBudget) -> list[Context]:
    types = _types_upto(b.max_type_depth)
    out: list[Context] = []
    for n in range(b.max_ctx_len + 1):
        out.extend(itertools.product(types, repeat=n))
    return out


@lru_cache(maxsize=None)
def _terms_exact(ctx: Context, ty: Type, n: int, universe: tuple[Type, ...]) -> tuple:
    if n <= 0:
        return ()
    if n == 1:
        return tuple(Var(k) for k in range(len(ctx)) if lookup(ctx, k) == ty)
    out = []
    # app: sizes fn + arg == n - 1
    for fn_size in range(1, n - 1):
        arg_size = n - 1 - fn_size
        for arg_ty in universe:
            args = _terms_exact(ctx, arg_ty, arg_size, universe)
            if not args:
                continue
            for fn in _terms_exact(ctx, Arrow(arg_ty, ty), fn_size, universe):
                out.extend(App(fn, arg) for arg in args)
    if isinstance(ty, Arrow):
        inner = ctx + (ty.dom,)
        out.extend(Lam(ty.dom, body) for body in _terms_exact(inner, ty.cod, n - 1, universe))
    return tuple(out)


def enumerate_terms(ctx: Context, ty: Type, b: EnumBudget, min_size: int = 1) -> list:
    """Every plain term of type ``ty`` over ``ctx`` with at most ``max_term_size`` nodes."""
    universe = _types_upto(b.max_type_depth)
    out = []
    for n in range(max(min_size, 1), b.max_term_size + 1):
        out.extend(_terms_exact(tuple(ctx), ty, n, universe))
    return out


def palette(b: EnumBudget) -> list[Color]:
    return [Color()] + [Color(c) for c in range(1, b.max_colors + 1)]


def colorings(t, colors: list[Color]) -> list:
    """Every way of coloring the lambdas of a plain term."""
    match t:
        case Var():
            return [t]
        case App(fn, arg):
            return [App(f, a) for f in colorings(fn, colors) for a in colorings(arg, colors)]
        case Lam(dom, body):
            bodies = colorings(body, colors)
            return [CLam(c, dom, bb) for c in colors for bb in bodies]
    raise TypeError(t)


def enumerate_colored_terms(ctx: Context, ty: Type, b: EnumBudget) -> list:
    colors = palette(b)
    return [c for t in enumerate_terms(ctx, ty, b) for c in colorings(t, colors)]


def enumerate_renamings(src: Context, dst: Context) -> list[Assignment]:
    """Every type-respecting variable assignment ``src → dst``."""
    choices = [
        [j for j in range(len(dst)) if lookup(dst, j) == lookup(src, k)]
        for k in range(len(src))
    ]
    return [Assignment(tuple(src), tuple(dst), Family.VAR, entries) for entries in itertools.product(*choices)]


def enumerate_substs(src: Context, dst: Context, b: EnumBudget, colored: bool = False) -> list[Assignment]:
    """Every type-respecting term assignment ``src → dst`` with entries within budget."""
    make = enumerate_colored_terms if colored else enumerate_terms
    family = Family.COLORED if colored else Family.TERM
    choices = [make(tuple(dst), lookup(src, k), b) for k in range(len(src))]
    return [Assignment(tuple(src), tuple(dst), family, entries) for entries in itertools.product(*choices)]


def typed_terms(ctx: Context, b: EnumBudget, colored: bool = False) -> list[tuple[Type, object]]:
    """``(type, term)`` pairs over ``ctx`` for every type in the universe."""
    make = enumerate_colored_terms if colored else enumerate_terms
    return [(ty, t) for ty in enumerate_types(b) for t in make(ctx, ty, b)]
