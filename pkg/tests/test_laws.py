import json

import pytest

from scopekit import EMPTY, IOTA, CLam, Color, Lam, Var, arrow, erase, identity, kit
from scopekit.enumerate import EnumBudget
from scopekit.laws import (
    MAX_STORED_FAILURES,
    LawReport,
    check_composition_laws,
    check_kit_laws,
    check_oracle_laws,
    render_machine,
    render_text,
    run_suites,
)
from scopekit.mutants import mutant

II = arrow(IOTA, IOTA)
B = Lam(IOTA, Var(0))
SMALL = EnumBudget(max_type_depth=1, max_ctx_len=2, max_term_size=4, max_colors=1, max_entry_size=2)


@pytest.fixture(scope="module")
def small_reports():
    return run_suites(SMALL)


def test_small_budget_all_suites_hold(small_reports):
    bad = [r for r in small_reports if not r.ok]
    assert not bad, render_text(bad)
    assert all(r.cases > 0 for r in small_reports), [r.law for r in small_reports if r.cases == 0]


def test_report_names_are_stable(small_reports):
    names = [r.law for r in small_reports]
    assert names[:4] == ["rename-oracle", "subst-oracle", "rename-preserves-type", "subst-preserves-type"]
    assert {"Hvar", "Hrename", "Hsubst", "Hsubst-single", "Hlift", "RR", "RS", "SR", "SS", "subst-lemma"} <= set(names)


def test_sweeps_are_deterministic():
    b = EnumBudget(max_type_depth=1, max_ctx_len=1, max_term_size=3, max_colors=1)
    first = [(r.law, r.cases) for r in check_composition_laws(b)]
    assert first == [(r.law, r.cases) for r in check_composition_laws(b)]


def test_hom_single_subst_example():
    # t = λ@1 ι. var 0, t' = var 0 over [ι→ι]
    t = CLam(Color(1), IOTA, Var(0))
    z = kit.single_subst(EMPTY, II, t, colored=True)
    lhs = erase(kit.subst(z, Var(0)))
    rhs = kit.subst(kit.single_subst(EMPTY, II, erase(t)), erase(Var(0)))
    assert lhs == rhs == B


def test_ss_example(term_a, a_of_b):
    sigma1 = kit.substitution((II,), (II, II), [Var(1)])
    sigma2 = kit.substitution((II, II), EMPTY, [B, B])
    both = kit.compose(sigma2, sigma1)
    assert kit.subst(both, term_a) == kit.subst(sigma2, kit.subst(sigma1, term_a)) == a_of_b


def test_rr_with_identities(term_a):
    ident = identity((II,))
    assert kit.rename(kit.compose(ident, ident), term_a) == kit.rename(ident, kit.rename(ident, term_a))


# -- mutation sensitivity ------------------------------------------------------


def test_mutant_breaks_oracle_suite():
    with mutant("skip-weaken-rename"):
        reports = check_oracle_laws(SMALL, fail_fast=True)
    failed = [r for r in reports if not r.ok]
    assert failed and failed[0].law == "subst-oracle"
    assert failed[0].failures[0].expected != failed[0].failures[0].got


def test_mutant_is_scoped():
    with mutant("skip-weaken-rename"):
        pass
    assert all(r.ok for r in check_kit_laws(EnumBudget(1, 1, 3, 1)))


def test_unknown_mutant():
    with pytest.raises(ValueError):
        with mutant("nope"):
            pass


# -- reports -------------------------------------------------------------------


def test_report_counts_and_caps_failures():
    rep = LawReport("demo")
    for k in range(MAX_STORED_FAILURES + 5):
        rep.check(0, k, k=k)
    assert rep.cases == MAX_STORED_FAILURES + 5
    assert rep.failed == MAX_STORED_FAILURES + 4
    assert len(rep.failures) == MAX_STORED_FAILURES


def test_render_text_and_machine():
    rep = LawReport("demo")
    rep.check(Var(0), Var(1), t=B)
    text = render_text([rep])
    assert text.startswith("FAIL  demo") and "expected" in text
    lines = [json.loads(line) for line in render_machine([rep]).splitlines()]
    assert lines[0] == {"law": "demo", "ok": False, "cases": 1, "failures": 1}
    assert lines[1]["law"] == "demo" and set(lines[1]) == {"law", "inputs", "expected", "got"}
