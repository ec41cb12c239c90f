"""Reference renaming and substitution, written the direct two-pass way.

These never touch the traversal kit: environments are plain Python functions,
renaming is defined first, and substitution weakens its entries through that
renaming. They exist to be compared against ``kit.rename`` and ``kit.subst``.
"""

from __future__ import annotations

from typing import Callable

from .kit import Assignment, Family
from .syntax import App, CLam, Lam, Var

RenFn = Callable[[int], int]
SubFn = Callable[[int], object]


def weaken_ren(r: RenFn) -> RenFn:
    return lambda k: 0 if k == 0 else r(k - 1) + 1


def rename_fn(r: RenFn, t):
    match t:
        case Var(k):
            return Var(r(k))
        case App(fn, arg):
            return App(rename_fn(r, fn), rename_fn(r, arg))
        case Lam(dom, body):
            return Lam(dom, rename_fn(weaken_ren(r), body))
        case CLam(color, dom, body):
            return CLam(color, dom, rename_fn(weaken_ren(r), body))
    raise TypeError(t)


def shift(t):
    return rename_fn(lambda k: k + 1, t)


def weaken_sub(s: SubFn) -> SubFn:
    return lambda k: Var(0) if k == 0 else shift(s(k - 1))


def subst_fn(s: SubFn, t):
    match t:
        case Var(k):
            return s(k)
        case App(fn, arg):
            return App(subst_fn(s, fn), subst_fn(s, arg))
        case Lam(dom, body):
            return Lam(dom, subst_fn(weaken_sub(s), body))
        case CLam(color, dom, body):
            return CLam(color, dom, subst_fn(weaken_sub(s), body))
    raise TypeError(t)


def naive_rename(rho: Assignment, t):
    if rho.family is not Family.VAR:
        raise TypeError("naive_rename needs a variable assignment")
    entries = rho.entries
    return rename_fn(lambda k: entries[k], t)


def naive_subst(sigma: Assignment, t):
    if sigma.family is Family.VAR:
        raise TypeError("naive_subst needs a term assignment")
    entries = sigma.entries
    return subst_fn(lambda k: entries[k], t)
