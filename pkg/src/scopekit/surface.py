"""Named surface syntax: parsing, elaboration to de Bruijn terms, pretty-printing.

Grammar::

    Type ::= "i" | Type "->" Type | "(" Type ")"          (-> is right-assoc)
    Term ::= "\\" ident ":" Type ["@" nat] "." Term | App
    App  ::= Atom+ [lambda]                               (left-assoc)
    Atom ::= ident | "#" nat | "(" Term ")"

``#k`` names ambient slot ``k`` counted from the newest, which is how the
pretty-printer renders ambient variables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .syntax import (
    IOTA,
    App,
    Arrow,
    ArgMismatch,
    CLam,
    Color,
    Context,
    Judgment,
    Lam,
    LambdaError,
    NotAFunction,
    OutOfScope,
    ScopeTypeError,
    Type,
    Var,
    show_type,
    synthesize,
)


class ParseError(LambdaError):
    def __init__(self, position: int, message: str):
        super().__init__(f"at {position}: {message}")
        self.position = position
        self.message = message


class UnboundName(ScopeTypeError):
    def __init__(self, ident: str, position: int | None = None):
        super().__init__(f"unbound name {ident!r}")
        self.ident = ident
        self.position = position


# -- surface trees -----------------------------------------------------------


@dataclass(frozen=True)
class Name:
    ident: str
    pos: int = 0


@dataclass(frozen=True)
class Ambient:
    slot: int
    pos: int = 0


@dataclass(frozen=True)
class Application:
    fn: "SurfaceTerm"
    arg: "SurfaceTerm"
    pos: int = 0


@dataclass(frozen=True)
class Lambda:
    ident: str
    annotation: Type
    body: "SurfaceTerm"
    color: int | None = None
    pos: int = 0


SurfaceTerm = Union[Name, Ambient, Application, Lambda]


def strip_positions(st: SurfaceTerm) -> SurfaceTerm:
    """Zero every ``pos`` field, for comparing trees by shape alone."""
    match st:
        case Name(ident):
            return Name(ident)
        case Ambient(slot):
            return Ambient(slot)
        case Application(fn, arg):
            return Application(strip_positions(fn), strip_positions(arg))
        case Lambda(ident, ann, body, color):
            return Lambda(ident, ann, strip_positions(body), color)
    raise TypeError(st)


# -- lexer -------------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<arrow>->)
  | (?P<ambient>\#[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<nat>[0-9]+)
  | (?P<punct>[\\:.@(),])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(pos, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            out.append(Token(value if kind == "punct" else kind, value, pos))
        pos = m.end()
    out.append(Token("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tok
        if tok.kind != "eof":
            self.i += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> Token:
        if self.tok.kind != kind:
            found = self.tok.text or "end of input"
            raise ParseError(self.tok.pos, f"expected {what or kind!r}, found {found!r}")
        return self.advance()

    def done(self) -> None:
        if self.tok.kind != "eof":
            raise ParseError(self.tok.pos, f"unexpected {self.tok.text!r}")

    # types

    def type_(self) -> Type:
        dom = self.type_atom()
        if self.tok.kind == "arrow":
            self.advance()
            return Arrow(dom, self.type_())
        return dom

    def type_atom(self) -> Type:
        tok = self.tok
        if tok.kind == "ident" and tok.text == "i":
            self.advance()
            return IOTA
        if tok.kind == "(":
            self.advance()
            ty = self.type_()
            self.expect(")")
            return ty
        raise ParseError(tok.pos, f"expected a type, found {tok.text or 'end of input'!r}")

    # terms

    def term(self) -> SurfaceTerm:
        if self.tok.kind == "\\":
            return self.lam()
        return self.app()

    def lam(self) -> Lambda:
        start = self.expect("\\").pos
        ident = self.expect("ident", "binder name").text
        self.expect(":")
        ann = self.type_()
        color = None
        if self.tok.kind == "@":
            self.advance()
            color = int(self.expect("nat", "color number").text)
        self.expect(".")
        return Lambda(ident, ann, self.term(), color, start)

    def app(self) -> SurfaceTerm:
        head = self.atom()
        while True:
            if self.tok.kind == "\\":
                return Application(head, self.lam(), head.pos)
            if self.tok.kind in ("ident", "ambient", "("):
                head = Application(head, self.atom(), head.pos)
            else:
                return head

    def atom(self) -> SurfaceTerm:
        tok = self.tok
        if tok.kind == "ident":
            self.advance()
            return Name(tok.text, tok.pos)
        if tok.kind == "ambient":
            self.advance()
            return Ambient(int(tok.text[1:]), tok.pos)
        if tok.kind == "(":
            self.advance()
            inner = self.term()
            self.expect(")")
            return inner
        raise ParseError(tok.pos, f"expected a term, found {tok.text or 'end of input'!r}")


def _run(text: str, rule: str):
    p = _Parser(text)
    try:
        out = getattr(p, rule)()
    except RecursionError:
        raise ParseError(p.tok.pos, "nesting too deep") from None
    p.done()
    return out


def parse_type(text: str) -> Type:
    return _run(text, "type_")


def parse_term(text: str) -> SurfaceTerm:
    return _run(text, "term")


# -- named contexts ----------------------------------------------------------


@dataclass(frozen=True)
class NamedContext:
    """``(name, type)`` pairs, oldest first. A ``None`` name is reachable only as ``#k``."""

    entries: tuple[tuple[str | None, Type], ...] = ()

    def __post_init__(self):
        names = [n for n, _ in self.entries if n is not None]
        if len(names) != len(set(names)):
            raise ValueError(f"duplicate names in context: {names}")

    @classmethod
    def anonymous(cls, ctx: Context) -> "NamedContext":
        return cls(tuple((None, ty) for ty in ctx))

    @property
    def types(self) -> Context:
        return tuple(ty for _, ty in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def parse_context(text: str) -> NamedContext:
    """``"a:i, f:i->i"`` with the leftmost entry oldest."""
    p = _Parser(text)
    entries: list[tuple[str, Type]] = []
    seen = set()
    if p.tok.kind != "eof":
        while True:
            tok = p.expect("ident", "name")
            if tok.text in seen:
                raise ParseError(tok.pos, f"duplicate name {tok.text!r}")
            seen.add(tok.text)
            p.expect(":")
            entries.append((tok.text, p.type_()))
            if p.tok.kind != ",":
                break
            p.advance()
    p.done()
    return NamedContext(tuple(entries))


# -- elaboration -------------------------------------------------------------


def has_colors(st: SurfaceTerm) -> bool:
    match st:
        case Application(fn, arg):
            return has_colors(fn) or has_colors(arg)
        case Lambda(_, _, body, color):
            return color is not None or has_colors(body)
    return False


def elaborate(nctx: NamedContext, st: SurfaceTerm, colored: bool | None = None) -> Judgment:
    """Resolve names to de Bruijn indices and type the result.

    Names resolve to the innermost binder first, then to the ambient context
    from newest to oldest. With ``colored=None`` the output is a colored term
    iff some lambda carries an ``@`` tag.
    """
    if colored is None:
        colored = has_colors(st)
    elif not colored and has_colors(st):
        raise ParseError(_first_color_pos(st), "color tags need colored elaboration")
    term, ty = _elab(nctx, [], st, colored)
    assert synthesize(nctx.types, term) == ty
    return Judgment(nctx.types, term, ty)


def _first_color_pos(st: SurfaceTerm) -> int:
    match st:
        case Application(fn, arg):
            return _first_color_pos(fn) if has_colors(fn) else _first_color_pos(arg)
        case Lambda(_, _, body, color, pos):
            return pos if color is not None else _first_color_pos(body)
    return 0


def _elab(nctx: NamedContext, binders: list[tuple[str, Type]], st: SurfaceTerm, colored: bool):
    depth = len(binders)
    match st:
        case Name(ident, pos):
            for dist, (name, ty) in enumerate(reversed(binders)):
                if name == ident:
                    return Var(dist), ty
            for dist, (name, ty) in enumerate(reversed(nctx.entries)):
                if name == ident:
                    return Var(depth + dist), ty
            raise UnboundName(ident, pos)
        case Ambient(slot, pos):
            if slot >= len(nctx):
                raise OutOfScope(slot, len(nctx)).at(pos)
            return Var(depth + slot), nctx.entries[len(nctx) - 1 - slot][1]
        case Application(fn, arg, pos):
            fn_term, fn_ty = _elab(nctx, binders, fn, colored)
            if not isinstance(fn_ty, Arrow):
                raise NotAFunction(fn_ty).at(fn.pos)
            arg_term, arg_ty = _elab(nctx, binders, arg, colored)
            if arg_ty != fn_ty.dom:
                raise ArgMismatch(fn_ty.dom, arg_ty).at(arg.pos)
            return App(fn_term, arg_term), fn_ty.cod
        case Lambda(ident, ann, body, color, pos):
            body_term, body_ty = _elab(nctx, binders + [(ident, ann)], body, colored)
            if colored:
                return CLam(Color(color), ann, body_term), Arrow(ann, body_ty)
            return Lam(ann, body_term), Arrow(ann, body_ty)
    raise TypeError(st)


# -- pretty-printing ---------------------------------------------------------


def pretty(ctx: Context, t) -> str:
    """Render with binders named ``x<depth>`` and ambient variables as ``#k``."""
    return "".join(_pp(t, 0, "top"))


def _pp(t, depth: int, where: str) -> Iterator[str]:
    match t:
        case Var(k):
            yield f"x{depth - 1 - k}" if k < depth else f"#{k - depth}"
        case App(fn, arg):
            if where == "arg":
                yield "("
            yield from _pp(fn, depth, "fn")
            yield " "
            yield from _pp(arg, depth, "arg")
            if where == "arg":
                yield ")"
        case Lam(dom, body) | CLam(_, dom, body):
            if where != "top":
                yield "("
            tag = ""
            if isinstance(t, CLam) and t.color.tag is not None:
                tag = f" @{t.color.tag}"
            yield f"\\x{depth}:{show_type(dom)}{tag}. "
            yield from _pp(body, depth + 1, "top")
            if where != "top":
                yield ")"
        case _:
            raise TypeError(t)


def roundtrip(ctx: Context, t, colored: bool = False):
    """``elaborate(parse_term(pretty(ctx, t)))`` over an anonymous context."""
    return elaborate(NamedContext.anonymous(ctx), parse_term(pretty(ctx, t)), colored=colored)


def format_context(nctx: NamedContext | Sequence[tuple[str, Type]]) -> str:
    entries = nctx.entries if isinstance(nctx, NamedContext) else nctx
    return ", ".join(f"{name}:{show_type(ty)}" for name, ty in entries)
