import itertools

import pytest

from scopekit import EMPTY, IOTA, App, Arrow, Lam, Var, arrow, synthesize
from scopekit.enumerate import (
    DEFAULT_BUDGET,
    EnumBudget,
    enumerate_colored_terms,
    enumerate_contexts,
    enumerate_renamings,
    enumerate_substs,
    enumerate_terms,
    enumerate_types,
    palette,
)
from scopekit.syntax import LambdaError, erase, size

II = arrow(IOTA, IOTA)
B = Lam(IOTA, Var(0))


def budget(**kw) -> EnumBudget:
    return EnumBudget(**{**DEFAULT_BUDGET.__dict__, **kw})


# -- types and contexts -------------------------------------------------------


def test_type_counts_follow_recurrence():
    count = 1
    for d in range(4):
        assert len(enumerate_types(budget(max_type_depth=d))) == count
        count = 1 + count * count


def test_small_type_universes():
    assert enumerate_types(budget(max_type_depth=0)) == [IOTA]
    assert enumerate_types(budget(max_type_depth=1)) == [IOTA, II]
    depth2 = enumerate_types(budget(max_type_depth=2))
    assert Arrow(II, IOTA) in depth2 and Arrow(IOTA, II) in depth2 and Arrow(II, II) in depth2


def test_contexts():
    assert enumerate_contexts(budget(max_ctx_len=0)) == [EMPTY]
    assert enumerate_contexts(budget(max_type_depth=0, max_ctx_len=1)) == [EMPTY, (IOTA,)]
    assert (IOTA, II) in enumerate_contexts(budget(max_type_depth=1, max_ctx_len=2))
    assert len(enumerate_contexts(DEFAULT_BUDGET)) == 1 + 5 + 25


def test_budget_rejects_negative():
    with pytest.raises(ValueError):
        EnumBudget(max_term_size=-1)


# -- terms ---------------------------------------------------------------------


def test_no_closed_base_terms():
    assert enumerate_terms(EMPTY, IOTA, DEFAULT_BUDGET) == []


def test_closed_identity_is_the_only_small_arrow():
    assert enumerate_terms(EMPTY, II, budget(max_term_size=2)) == [B]


def test_contains_term_a(term_a):
    assert term_a in enumerate_terms((II,), II, budget(max_term_size=6))


def test_ordered_by_size_and_deterministic():
    ts = enumerate_terms((II, IOTA), IOTA, DEFAULT_BUDGET)
    assert [size(t) for t in ts] == sorted(size(t) for t in ts)
    assert ts == enumerate_terms((II, IOTA), IOTA, DEFAULT_BUDGET)
    assert len(set(ts)) == len(ts)


def test_default_domain_sizes():
    b = DEFAULT_BUDGET
    plain = sum(len(enumerate_terms(c, ty, b)) for c in enumerate_contexts(b) for ty in enumerate_types(b))
    colored = sum(
        len(enumerate_colored_terms(c, ty, b)) for c in enumerate_contexts(b) for ty in enumerate_types(b)
    )
    assert (plain, colored) == (1661, 12203)


def _raw_trees(n, ctx_len, annots):
    """Every raw term with exactly ``n`` nodes; indices may point past the context."""
    if n == 1:
        return [Var(k) for k in range(ctx_len + 4)]
    out = []
    for k in range(1, n - 1):
        out += [App(f, a) for f in _raw_trees(k, ctx_len, annots) for a in _raw_trees(n - 1 - k, ctx_len, annots)]
    out += [Lam(ty, body) for ty in annots for body in _raw_trees(n - 1, ctx_len + 1, annots)]
    return out


def _app_args_in(t, ctx, universe) -> bool:
    match t:
        case Var():
            return True
        case App(fn, arg):
            return synthesize(ctx, arg) in universe and _app_args_in(fn, ctx, universe) and _app_args_in(arg, ctx, universe)
        case Lam(dom, body):
            return _app_args_in(body, ctx + (dom,), universe)


def _typed_or_none(ctx, t):
    try:
        return synthesize(ctx, t)
    except LambdaError:
        return None


@pytest.mark.parametrize("ctx", [EMPTY, (IOTA,), (II,), (IOTA, II)])
def test_complete_against_generate_and_filter(ctx):
    b = budget(max_term_size=4)
    universe = enumerate_types(b)
    for ty in universe:
        expected = set()
        for n in range(1, b.max_term_size + 1):
            for t in _raw_trees(n, len(ctx), universe):
                if _typed_or_none(ctx, t) == ty and _app_args_in(t, ctx, universe):
                    expected.add(t)
        assert set(enumerate_terms(ctx, ty, b)) == expected


def test_colored_terms_erase_onto_plain_terms():
    b = budget(max_term_size=4)
    plain = enumerate_terms((IOTA,), II, b)
    colored = enumerate_colored_terms((IOTA,), II, b)
    assert {erase(t) for t in colored} == set(plain)
    assert len(palette(b)) == 3


# -- assignments --------------------------------------------------------------


def test_renamings():
    assert [r.entries for r in enumerate_renamings((IOTA,), (IOTA,))] == [(0,)]
    assert sorted(r.entries for r in enumerate_renamings((IOTA,), (IOTA, IOTA))) == [(0,), (1,)]
    assert enumerate_renamings((II,), (IOTA,)) == []


def test_closed_substitution():
    assert [s.entries for s in enumerate_substs((II,), EMPTY, budget(max_term_size=2))] == [(B,)]


def test_every_emitted_assignment_validates():
    b = budget(max_term_size=3)
    for src, dst in itertools.product(enumerate_contexts(b), repeat=2):
        for a in enumerate_renamings(src, dst):
            a.validate()
        for a in enumerate_substs(src, dst, b):
            a.validate()
