import pytest
from hypothesis import given
from hypothesis import strategies as st

from scopekit import (
    EMPTY,
    IOTA,
    App,
    ArgMismatch,
    Arrow,
    CLam,
    Color,
    Lam,
    NotAFunction,
    OutOfScope,
    Var,
    arrow,
    erase,
    extend,
    lookup,
    synthesize,
    synthesize_colored,
    term_eq,
)
from scopekit.enumerate import EnumBudget, enumerate_colored_terms, enumerate_contexts, enumerate_types
from scopekit.syntax import show_type, size

from strategies import contexts, types

II = arrow(IOTA, IOTA)


def test_arrow_is_right_nested():
    assert arrow(IOTA, IOTA, IOTA) == Arrow(IOTA, Arrow(IOTA, IOTA))
    assert show_type(arrow(IOTA, IOTA, IOTA)) == "i -> i -> i"
    assert show_type(Arrow(II, IOTA)) == "(i -> i) -> i"


@given(contexts, types, st.integers(0, 5))
def test_lookup_laws(ctx, ty, k):
    assert lookup(extend(ctx, ty), 0) == ty
    if k < len(ctx):
        assert lookup(extend(ctx, ty), k + 1) == lookup(ctx, k)
    else:
        with pytest.raises(OutOfScope):
            lookup(ctx, k)


def test_synthesize_identity():
    assert synthesize(EMPTY, Lam(IOTA, Var(0))) == II


def test_synthesize_k():
    assert synthesize(EMPTY, Lam(IOTA, Lam(IOTA, Var(1)))) == arrow(IOTA, IOTA, IOTA)


def test_synthesize_empty_context_var():
    with pytest.raises(OutOfScope) as info:
        synthesize(EMPTY, Var(0))
    assert (info.value.idx, info.value.ctx_len) == (0, 0)


def test_synthesize_term_a(term_a):
    assert synthesize((II,), term_a) == II


def test_synthesize_not_a_function():
    with pytest.raises(NotAFunction) as info:
        synthesize((IOTA,), App(Var(0), Var(0)))
    assert info.value.ty == IOTA


def test_synthesize_arg_mismatch():
    with pytest.raises(ArgMismatch) as info:
        synthesize((IOTA, II), App(Var(0), Var(0)))
    assert (info.value.expected, info.value.got) == (IOTA, II)


@pytest.mark.parametrize("color", [Color(), Color(1)])
def test_colored_synthesis_ignores_color(color):
    assert synthesize_colored(EMPTY, CLam(color, IOTA, Var(0))) == II


def test_erase_examples():
    assert erase(CLam(Color(3), IOTA, Var(0))) == Lam(IOTA, Var(0))
    colored = App(CLam(Color(1), IOTA, Var(0)), Var(0))
    assert erase(colored) == App(Lam(IOTA, Var(0)), Var(0))


def test_erase_commutes_with_synthesis():
    b = EnumBudget(max_type_depth=2, max_ctx_len=1, max_term_size=4, max_colors=2)
    checked = 0
    for ctx in enumerate_contexts(b):
        for ty in enumerate_types(b):
            for t in enumerate_colored_terms(ctx, ty, b):
                assert synthesize_colored(ctx, t) == synthesize(ctx, erase(t)) == ty
                assert size(erase(t)) == size(t)
                checked += 1
    assert checked > 200


def test_term_eq():
    assert term_eq(Var(0), Var(0))
    assert not term_eq(Var(0), Var(1))
    assert not term_eq(Lam(IOTA, Var(0)), CLam(Color(), IOTA, Var(0)))


def test_terms_are_hashable_and_immutable():
    t = Lam(IOTA, Var(0))
    assert hash(t) == hash(Lam(IOTA, Var(0)))
    with pytest.raises(AttributeError):
        t.body = Var(1)
