"""Core syntax: simple types, snoc contexts, de Bruijn terms and their colored twins.

Contexts are tuples written oldest-first, so ``(IOTA, arrow(IOTA, IOTA))`` is the
context with ``ι ⟶ ι`` as its newest slot. Variable index 0 always names the
newest slot.

Plain and colored terms share the ``Var`` and ``App`` nodes. A plain term only
contains ``Lam``; a colored term only contains ``CLam``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


class LambdaError(Exception):
    """Base class for every error raised by this package."""


class ScopeTypeError(LambdaError):
    """A term is out of scope or ill-typed.  ``position`` is set by the frontend."""

    position: int | None = None

    def at(self, position: int | None) -> "ScopeTypeError":
        self.position = position
        return self


class OutOfScope(ScopeTypeError):
    def __init__(self, idx: int, ctx_len: int):
        super().__init__(f"variable #{idx} out of scope in a context of length {ctx_len}")
        self.idx = idx
        self.ctx_len = ctx_len


class NotAFunction(ScopeTypeError):
    def __init__(self, ty: "Type"):
        super().__init__(f"cannot apply a term of type {show_type(ty)}")
        self.ty = ty


class ArgMismatch(ScopeTypeError):
    def __init__(self, expected: "Type", got: "Type"):
        super().__init__(f"expected {show_type(expected)}, got {show_type(got)}")
        self.expected = expected
        self.got = got


# -- types -------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Base:
    def __repr__(self) -> str:
        return "IOTA"


@dataclass(frozen=True, slots=True)
class Arrow:
    dom: "Type"
    cod: "Type"


Type = Union[Base, Arrow]
IOTA = Base()


def arrow(*tys: Type) -> Type:
    """Right-nested arrow: ``arrow(a, b, c) == a ⟶ (b ⟶ c)``."""
    *doms, out = tys
    for dom in reversed(doms):
        out = Arrow(dom, out)
    return out


def type_depth(ty: Type) -> int:
    match ty:
        case Base():
            return 0
        case Arrow(dom, cod):
            return 1 + max(type_depth(dom), type_depth(cod))
    raise TypeError(ty)


def show_type(ty: Type) -> str:
    match ty:
        case Base():
            return "i"
        case Arrow(Arrow() as dom, cod):
            return f"({show_type(dom)}) -> {show_type(cod)}"
        case Arrow(dom, cod):
            return f"{show_type(dom)} -> {show_type(cod)}"
    raise TypeError(ty)


# -- contexts ----------------------------------------------------------------

Context = tuple[Type, ...]
EMPTY: Context = ()


def extend(ctx: Context, ty: Type) -> Context:
    return ctx + (ty,)


def lookup(ctx: Context, k: int) -> Type:
    if not 0 <= k < len(ctx):
        raise OutOfScope(k, len(ctx))
    return ctx[len(ctx) - 1 - k]


def valid_var(ctx: Context, k: int, ty: Type) -> bool:
    return 0 <= k < len(ctx) and lookup(ctx, k) == ty


# -- terms -------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Color:
    """A lambda tag: ``Color()`` is plain, ``Color(n)`` is tagged with ``n``."""

    tag: int | None = None

    def __repr__(self) -> str:
        return "PLAIN" if self.tag is None else f"Color({self.tag})"


PLAIN = Color()


@dataclass(frozen=True, slots=True)
class Var:
    idx: int


@dataclass(frozen=True, slots=True)
class App:
    fn: "AnyTerm"
    arg: "AnyTerm"


@dataclass(frozen=True, slots=True)
class Lam:
    arg_ty: Type
    body: "Term"


@dataclass(frozen=True, slots=True)
class CLam:
    color: Color
    arg_ty: Type
    body: "ColoredTerm"


Term = Union[Var, App, Lam]
ColoredTerm = Union[Var, App, CLam]
AnyTerm = Union[Var, App, Lam, CLam]


@dataclass(frozen=True)
class Judgment:
    ctx: Context
    term: AnyTerm
    ty: Type


def size(t: AnyTerm) -> int:
    match t:
        case Var():
            return 1
        case App(fn, arg):
            return 1 + size(fn) + size(arg)
        case Lam(_, body) | CLam(_, _, body):
            return 1 + size(body)
    raise TypeError(t)


def synthesize(ctx: Context, t: AnyTerm) -> Type:
    """Return the unique type of ``t`` over ``ctx``.

    Raises ``OutOfScope``, ``NotAFunction`` or ``ArgMismatch``. Lambda colors are
    ignored, so this also serves colored terms.
    """
    match t:
        case Var(k):
            return lookup(ctx, k)
        case App(fn, arg):
            fn_ty = synthesize(ctx, fn)
            if not isinstance(fn_ty, Arrow):
                raise NotAFunction(fn_ty)
            arg_ty = synthesize(ctx, arg)
            if arg_ty != fn_ty.dom:
                raise ArgMismatch(fn_ty.dom, arg_ty)
            return fn_ty.cod
        case Lam(dom, body) | CLam(_, dom, body):
            return Arrow(dom, synthesize(extend(ctx, dom), body))
    raise TypeError(f"not a term: {t!r}")


def synthesize_colored(ctx: Context, t: ColoredTerm) -> Type:
    return synthesize(ctx, t)


def erase(t: ColoredTerm) -> Term:
    match t:
        case Var():
            return t
        case App(fn, arg):
            return App(erase(fn), erase(arg))
        case CLam(_, dom, body):
            return Lam(dom, erase(body))
    raise TypeError(f"not a colored term: {t!r}")


def is_plain(t: AnyTerm) -> bool:
    match t:
        case Var():
            return True
        case App(fn, arg):
            return is_plain(fn) and is_plain(arg)
        case Lam(_, body):
            return is_plain(body)
    return False


def is_colored(t: AnyTerm) -> bool:
    match t:
        case Var():
            return True
        case App(fn, arg):
            return is_colored(fn) and is_colored(arg)
        case CLam(_, _, body):
            return is_colored(body)
    return False


def term_eq(a: Term, b: Term) -> bool:
    return a == b


def colored_term_eq(a: ColoredTerm, b: ColoredTerm) -> bool:
    return a == b


def judge(ctx: Context, t: AnyTerm) -> Judgment:
    return Judgment(ctx, t, synthesize(ctx, t))


def show_term(t: AnyTerm) -> str:
    """Nameless debugging form, e.g. ``λι. #1 (#1 #0)``."""
    match t:
        case Var(k):
            return f"#{k}"
        case App(fn, arg):
            left = f"({show_term(fn)})" if isinstance(fn, (Lam, CLam)) else show_term(fn)
            right = f"({show_term(arg)})" if not isinstance(arg, Var) else show_term(arg)
            return f"{left} {right}"
        case Lam(dom, body):
            return f"λ{show_type(dom)}. {show_term(body)}"
        case CLam(color, dom, body):
            tag = "" if color.tag is None else f"@{color.tag}"
            return f"λ{tag}{show_type(dom)}. {show_term(body)}"
    raise TypeError(t)
